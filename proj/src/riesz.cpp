#include "pointfree/riesz.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "pointfree/enumerate.hpp"

namespace pointfree {

namespace {

void require_dims(const RieszVec& a, const RieszVec& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "vectors of different dimension");
}

template <class Op>
RieszVec zip(const RieszVec& a, const RieszVec& b, Op op) {
  require_dims(a, b);
  std::vector<Rational> out;
  out.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(op(a[i], b[i]));
  return RieszVec(std::move(out));
}

}  // namespace

RieszVec operator+(const RieszVec& a, const RieszVec& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

RieszVec operator-(const RieszVec& a, const RieszVec& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

RieszVec operator*(const Rational& lambda, const RieszVec& a) {
  std::vector<Rational> out;
  for (const Rational& x : a.coords()) out.push_back(Rational(lambda * x));
  return RieszVec(std::move(out));
}

bool RieszVec::leq(const RieszVec& other) const {
  require_dims(*this, other);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

bool RieszVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
}

RieszVec join(const RieszVec& a, const RieszVec& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return std::max(x, y); });
}

RieszVec meet(const RieszVec& a, const RieszVec& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return std::min(x, y); });
}

RieszVec positive_part(const RieszVec& a) { return join(a, RieszVec::zero(a.dim())); }

RieszVec abs(const RieszVec& a) { return join(a, Rational(-1) * a); }

std::uint64_t BandFD::mask() const {
  std::uint64_t m = 0;
  for (std::size_t i : support) m |= std::uint64_t{1} << i;
  return m;
}

bool BandFD::contains(const RieszVec& v) const {
  if (v.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "vector and band of different dimension");
  for (std::size_t i = 0; i < dim; ++i) {
    if (v[i] != 0 && !std::binary_search(support.begin(), support.end(), i)) return false;
  }
  return true;
}

BandFD band_generated(const RieszVec& f) {
  BandFD b{f.dim(), {}};
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (f[i] != 0) b.support.push_back(i);
  }
  return b;
}

bool band_oracle_member(const RieszVec& g, const RieszVec& f, long bound) {
  require_dims(g, f);
  RieszVec ag = abs(g);
  RieszVec af = abs(f);
  for (long n = 1; n <= bound; ++n) {
    if (ag.leq(Rational(n) * af)) return true;
  }
  return false;
}

bool is_weak_unit(const RieszVec& e) {
  if (!RieszVec::zero(e.dim()).leq(e) || e.is_zero()) throw Error(ErrorCode::NotPositive, "e must be positive");
  return std::all_of(e.coords().begin(), e.coords().end(), [](const Rational& x) { return x > 0; });
}

FramePtr coordinate_frame(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, FramePtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, powerset_frame(n)).first;
  return it->second;
}

Scale band_scale(const RieszVec& f, const RieszVec& e) {
  require_dims(f, e);
  bool weak = false;
  try {
    weak = is_weak_unit(e);
  } catch (const Error&) {
    weak = false;
  }
  if (!weak) throw Error(ErrorCode::NotWeakUnit, "e is not a weak unit");
  std::vector<Rational> ratios;
  for (std::size_t i = 0; i < f.dim(); ++i) ratios.push_back(Rational(f[i] / e[i]));
  StepMap steps = StepMap::sample(Orientation::Antitone, ratios, [&](const Rational& p) {
    Element mask = 0;
    for (std::size_t i = 0; i < f.dim(); ++i) {
      if (f[i] > p * e[i]) mask |= Element{1} << i;
    }
    return mask;
  });
  return Scale{coordinate_frame(f.dim()), std::move(steps), {}};
}

RealFn m_embed(const RieszVec& f, const RieszVec& e) { return from_scale(band_scale(f, e)); }

std::pair<ExtRational, ExtRational> atom_value(const RealFn& g, std::size_t i) {
  return interval_at(g, [i](Element e) { return (e >> i & 1) != 0; });
}

std::pair<RieszVec, RieszVec> sandwich_check(const RealFn& g, const RieszVec& e) {
  const FramePtr& frame = g.frame();
  if (!same_frame(*frame, *coordinate_frame(e.dim()))) throw Error(ErrorCode::FrameMismatch, "g is not on 2^n");
  RealFn zero = constant(frame, Rational(0));
  if (!g.is_continuous() || !leq(zero, g) || g == zero) throw Error(ErrorCode::GNotPositive, "g must be > 0");

  // g(p,-) = 0 from the last up breakpoint on, so h = M e with M that breakpoint.
  Rational big = g.up().breakpoints().back();
  RieszVec h = big * e;

  Rational p;
  bool found = false;
  std::vector<Rational> cuts = g.up().breakpoints();
  cuts.push_back(Rational(0));
  for (const Rational& r : probe_points(cuts)) {
    if (r > 0 && g.up_at(r) != frame->bottom()) {
      p = r;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::GNotPositive, "g(p,-) vanishes for every p > 0");
  Element support = g.up_at(p);
  std::vector<Rational> fc(e.dim());
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (support >> i & 1) fc[i] = p * e[i];
  }
  return {RieszVec(std::move(fc)), std::move(h)};
}

BandAlgebraResult band_algebra_check(std::size_t n, const std::vector<Rational>& grid) {
  BandAlgebraResult out;
  FramePtr l = coordinate_frame(n);
  Booleanization b = booleanize(l);
  std::vector<Element> atoms_prime;
  for (std::size_t i = 0; i < n; ++i) atoms_prime.push_back((l->size() - 1) & ~(Element{1} << i));

  std::map<std::uint64_t, Element> iso;
  for (const RealFn& f : continuous_grid_functions(l, grid)) {
    // Coordinates of f in the model Q^n are its values at the atoms.
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < n; ++i) {
      auto [lo, hi] = interval_at_prime(f, atoms_prime[i]);
      if (!lo.is_finite() || !(lo == hi)) {
        out.detail = "non-real value at an atom";
        return out;
      }
      coords.push_back(lo.value());
    }
    std::uint64_t band = band_generated(RieszVec(std::move(coords))).mask();
    Element image = b.beta(coz(f));
    auto [it, fresh] = iso.emplace(band, image);
    if (!fresh && it->second != image) {
      out.detail = "one band, two cozero images";
      return out;
    }
  }
  out.bands = iso.size();
  if (iso.size() != (std::size_t{1} << n) || b.frame->size() != iso.size()) {
    out.detail = "band count differs from the Booleanization's size";
    return out;
  }
  for (const auto& [s, x] : iso) {
    for (const auto& [t, y] : iso) {
      bool sub = (s & ~t) == 0;
      if (sub != b.frame->leq(x, y) || (s == t) != (x == y)) {
        out.detail = "band inclusion and Booleanization order disagree";
        return out;
      }
    }
  }
  out.iso.assign(iso.begin(), iso.end());
  out.ok = true;
  out.detail = "bands of C(2^n) are order isomorphic to the Booleanization";
  return out;
}

}  // namespace pointfree
