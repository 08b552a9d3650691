#include "pointfree/spatial.hpp"

#include <algorithm>

namespace pointfree {

namespace {

template <class Pick>
ExtRealFn over_nbhd(const ExtRealFn& u, Pick pick) {
  const FiniteSpace& s = *u.space;
  ExtRealFn out{u.space, u.values};
  for (std::size_t x = 0; x < s.point_count(); ++x) {
    PointSet n = s.min_nbhd(x);
    for (std::size_t y = 0; y < s.point_count(); ++y) {
      if (n >> y & 1) out.values[x] = pick(out.values[x], u.values[y]);
    }
  }
  return out;
}

void require_nlsc(const ExtRealFn& u) {
  if (!is_nlsc(u)) throw Error(ErrorCode::NotNormalLsc, "function is not normal lower semicontinuous");
}

}  // namespace

bool is_lsc(const ExtRealFn& u) {
  const FiniteSpace& s = *u.space;
  for (std::size_t x = 0; x < s.point_count(); ++x) {
    for (std::size_t y = 0; y < s.point_count(); ++y) {
      if ((s.min_nbhd(x) >> y & 1) && u.values[y] < u.values[x]) return false;
    }
  }
  return true;
}

bool is_usc(const ExtRealFn& u) {
  ExtRealFn neg{u.space, {}};
  for (const ExtRational& v : u.values) neg.values.push_back(-v);
  return is_lsc(neg);
}

IntervalValuedFn::IntervalValuedFn(SpacePtr space, std::vector<ExtRational> lower, std::vector<ExtRational> upper)
    : space_(std::move(space)), lower_(std::move(lower)), upper_(std::move(upper)) {
  if (!space_) throw Error(ErrorCode::InvalidArgument, "null space");
  if (lower_.size() != space_->point_count() || upper_.size() != space_->point_count()) {
    throw Error(ErrorCode::DimensionMismatch, "one interval per point expected");
  }
  for (std::size_t x = 0; x < lower_.size(); ++x) {
    if (upper_[x] < lower_[x]) throw Error(ErrorCode::EndpointOrder, "lower > upper at point " + std::to_string(x));
  }
  if (!is_lsc(lower_fn())) throw Error(ErrorCode::NotSemicontinuous, "lower endpoint is not lower semicontinuous");
  if (!is_usc(upper_fn())) throw Error(ErrorCode::NotSemicontinuous, "upper endpoint is not upper semicontinuous");
}

bool leq(const IntervalValuedFn& f, const IntervalValuedFn& g) {
  for (std::size_t x = 0; x < f.lower().size(); ++x) {
    if (g.lower()[x] < f.lower()[x] || g.upper()[x] < f.upper()[x]) return false;
  }
  return true;
}

bool info_leq(const IntervalValuedFn& f, const IntervalValuedFn& g) {
  for (std::size_t x = 0; x < f.lower().size(); ++x) {
    if (g.lower()[x] < f.lower()[x] || f.upper()[x] < g.upper()[x]) return false;
  }
  return true;
}

void require_open_frame(const FiniteSpace& space, const FiniteFrame& frame) {
  const auto& opens = space.opens();
  bool ok = frame.size() == opens.size();
  for (std::size_t i = 0; ok && i < opens.size(); ++i) {
    for (std::size_t j = 0; ok && j < opens.size(); ++j) {
      ok = frame.leq(i, j) == ((opens[i] & ~opens[j]) == 0);
    }
  }
  if (!ok) throw Error(ErrorCode::FrameMismatch, "frame is not the open-set frame of the space");
}

IntervalValuedFn psi(const SpacePtr& space, const RealFn& h) {
  require_open_frame(*space, *h.frame());
  std::vector<ExtRational> lower, upper;
  for (std::size_t x = 0; x < space->point_count(); ++x) {
    auto [lo, hi] = interval_at(h, [&](Element e) { return (space->opens()[e] >> x & 1) != 0; });
    lower.push_back(lo);
    upper.push_back(hi);
  }
  return IntervalValuedFn(space, std::move(lower), std::move(upper));
}

RealFn psi_inverse(const FramePtr& frame, const IntervalValuedFn& f) {
  const FiniteSpace& s = *f.space();
  require_open_frame(s, *frame);
  auto open_of = [&](PointSet set) {
    auto idx = s.open_index(set);
    if (!idx) throw Error(ErrorCode::NotSemicontinuous, "level set is not open");
    return *idx;
  };
  std::vector<Rational> lo_c, hi_c;
  for (const ExtRational& v : f.lower()) {
    if (v.is_finite()) lo_c.push_back(v.value());
  }
  for (const ExtRational& v : f.upper()) {
    if (v.is_finite()) hi_c.push_back(v.value());
  }
  StepMap up = StepMap::sample(Orientation::Antitone, lo_c, [&](const Rational& r) {
    PointSet set = 0;
    for (std::size_t x = 0; x < s.point_count(); ++x) {
      if (ExtRational(r) < f.lower()[x]) set |= PointSet{1} << x;
    }
    return open_of(set);
  });
  StepMap down = StepMap::sample(Orientation::Isotone, hi_c, [&](const Rational& r) {
    PointSet set = 0;
    for (std::size_t x = 0; x < s.point_count(); ++x) {
      if (f.upper()[x] < ExtRational(r)) set |= PointSet{1} << x;
    }
    return open_of(set);
  });
  return RealFn(frame, std::move(up), std::move(down));
}

ExtRealFn baire_upper(const ExtRealFn& u) {
  return over_nbhd(u, [](const ExtRational& a, const ExtRational& b) { return std::max(a, b); });
}

ExtRealFn baire_lower(const ExtRealFn& u) {
  return over_nbhd(u, [](const ExtRational& a, const ExtRational& b) { return std::min(a, b); });
}

bool is_nlsc(const ExtRealFn& u) { return baire_lower(baire_upper(u)) == u; }

ExtRealFn nl_add(const ExtRealFn& u, const ExtRealFn& v) {
  require_nlsc(u);
  require_nlsc(v);
  if (!(*u.space == *v.space)) throw Error(ErrorCode::DimensionMismatch, "functions on different spaces");
  ExtRealFn w{u.space, {}};
  for (std::size_t x = 0; x < u.values.size(); ++x) {
    w.values.push_back(u.values[x] + v.values[x]);
  }
  return baire_lower(baire_upper(w));
}

ExtRealFn nl_scalar(const Rational& lambda, const ExtRealFn& u) {
  require_nlsc(u);
  if (lambda == 0) return constant_ext(u.space, ExtRational(0));
  ExtRealFn w{u.space, {}};
  for (const ExtRational& v : u.values) w.values.push_back(lambda * v);
  return baire_lower(baire_upper(w));
}

bool nearly_finite_spatial(const IntervalValuedFn& f) {
  const FiniteSpace& s = *f.space();
  PointSet finite = 0;
  for (std::size_t x = 0; x < s.point_count(); ++x) {
    if (f.lower()[x].is_finite() && f.upper()[x].is_finite()) finite |= PointSet{1} << x;
  }
  return s.is_dense(finite);
}

bool is_hausdorff_spatial(const IntervalValuedFn& f) {
  return baire_upper(f.lower_fn()) == f.upper_fn() && baire_lower(f.upper_fn()) == f.lower_fn();
}

ExtRealFn pi(const IntervalValuedFn& f) {
  if (!nearly_finite_spatial(f)) throw Error(ErrorCode::NotNearlyFinite, "function is not nearly finite");
  if (!is_hausdorff_spatial(f)) throw Error(ErrorCode::NotHausdorff, "function is not Hausdorff");
  return f.lower_fn();
}

IntervalValuedFn pi_inverse(const ExtRealFn& u) {
  require_nlsc(u);
  IntervalValuedFn f(u.space, u.values, baire_upper(u).values);
  if (!nearly_finite_spatial(f)) throw Error(ErrorCode::NotNearlyFinite, "function is not nearly finite");
  return f;
}

ExtRealFn constant_ext(const SpacePtr& space, const ExtRational& value) {
  return ExtRealFn{space, std::vector<ExtRational>(space->point_count(), value)};
}

}  // namespace pointfree
