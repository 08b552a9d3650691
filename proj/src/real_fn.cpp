#include "pointfree/real_fn.hpp"

#include <algorithm>
#include <bit>

namespace pointfree {

const char* to_string(FnClass c) {
  switch (c) {
    case FnClass::Continuous:
      return "C";
    case FnClass::ExtendedContinuous:
      return "C_extended";
    case FnClass::Partial:
      return "partial";
  }
  return "?";
}

namespace {

std::vector<Rational> probes_of(const StepMap& a, const StepMap& b) {
  const StepMap* maps[] = {&a, &b};
  return probe_points(std::span<const StepMap* const>(maps));
}

void require_same_frame(const RealFn& f, const RealFn& g) {
  if (!same_frame(*f.frame(), *g.frame())) throw Error(ErrorCode::FrameMismatch, "functions live on different frames");
}

}  // namespace

RealFn::RealFn(FramePtr frame, StepMap up, StepMap down)
    : frame_(std::move(frame)), up_(std::move(up)), down_(std::move(down)) {
  if (!frame_) throw Error(ErrorCode::InvalidArgument, "null frame");
  if (up_.orientation() != Orientation::Antitone || down_.orientation() != Orientation::Isotone) {
    throw Error(ErrorCode::InvalidArgument, "up must be antitone and down isotone");
  }
  const FiniteFrame& f = *frame_;
  if (!up_.is_monotone(f) || !down_.is_monotone(f)) throw Error(ErrorCode::NotMonotone, "generator images out of order");

  std::vector<Rational> probes = probes_of(up_, down_);
  // up is antitone and down isotone, so r1 over p >= q reduces to p = q.
  for (const Rational& p : probes) {
    if (f.meet(up_(p), down_(p)) != f.bottom()) {
      throw Error(ErrorCode::RelationViolated, "r1 fails at " + format_rational(p));
    }
  }
  // Likewise r2 over p < q is tightest as q decreases to p; consecutive probes
  // realize every such limit pair of segments.
  bool r2 = true;
  for (std::size_t i = 0; i + 1 < probes.size() && r2; ++i) {
    r2 = f.join(up_(probes[i]), down_(probes[i + 1])) == f.top();
  }
  bool r5 = up_.leftmost() == f.top();
  bool r6 = down_.rightmost() == f.top();
  if (r2 && r5 && r6) {
    class_ = FnClass::Continuous;
  } else if (r2) {
    class_ = FnClass::ExtendedContinuous;
  } else {
    class_ = FnClass::Partial;
  }
}

Element Scale::operator()(const Rational& p) const {
  for (const auto& [q, v] : points) {
    if (q == p) return v;
  }
  return steps(p);
}

namespace {

std::vector<Rational> scale_probes(const Scale& s) {
  std::vector<Rational> b = s.steps.breakpoints();
  for (const auto& pt : s.points) b.push_back(pt.first);
  return probe_points(std::move(b));
}

}  // namespace

bool Scale::is_extended_scale() const {
  if (!frame || steps.orientation() != Orientation::Antitone) return false;
  for (Element v : steps.values()) {
    if (v >= frame->size()) return false;
  }
  for (const auto& pt : points) {
    if (pt.second >= frame->size()) return false;
  }
  std::vector<Rational> probes = scale_probes(*this);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t j = i + 1; j < probes.size(); ++j) {
      if (!frame->rather_below((*this)(probes[j]), (*this)(probes[i]))) return false;
    }
  }
  return true;
}

bool Scale::is_scale() const {
  if (!is_extended_scale()) return false;
  Element all = frame->bottom();
  Element all_pc = frame->bottom();
  for (const Rational& p : scale_probes(*this)) {
    all = frame->join(all, (*this)(p));
    all_pc = frame->join(all_pc, frame->pseudocomplement((*this)(p)));
  }
  return all == frame->top() && all_pc == frame->top();
}

RealFn from_scale(const Scale& sigma) {
  if (!sigma.is_extended_scale()) throw Error(ErrorCode::NotAnExtendedScale, "sigma(q) not rather below sigma(p) for some p < q");
  const FiniteFrame& f = *sigma.frame;
  // Segment-wise: the join over r > p is the step value on p's own segment
  // (sigma is antitone off the isolated points, which never dominate a segment),
  // and the join of sigma(r)* over r < q is the pseudocomplement of the step
  // value on q's segment for the left-continuous reading.
  std::vector<Element> dv;
  for (Element v : sigma.steps.values()) dv.push_back(f.pseudocomplement(v));
  return RealFn(sigma.frame, sigma.steps, StepMap(Orientation::Isotone, sigma.steps.breakpoints(), std::move(dv)));
}

RealFn constant(const FramePtr& frame, const Rational& r) {
  return RealFn(frame, StepMap(Orientation::Antitone, {r}, {frame->top(), frame->bottom()}),
                StepMap(Orientation::Isotone, {r}, {frame->bottom(), frame->top()}));
}

RealFn characteristic(const FramePtr& frame, Element a, Element b) {
  frame->check_index(a);
  frame->check_index(b);
  if (frame->meet(a, b) != frame->bottom()) throw Error(ErrorCode::MeetNotZero, "a ^ b != 0");
  return RealFn(frame, StepMap(Orientation::Antitone, {Rational(0), Rational(1)}, {frame->top(), a, frame->bottom()}),
                StepMap(Orientation::Isotone, {Rational(0), Rational(1)}, {frame->bottom(), b, frame->top()}));
}

RealFn characteristic(const FramePtr& frame, Element a) {
  frame->check_index(a);
  if (!frame->is_complemented(a)) throw Error(ErrorCode::PreconditionFailed, "element is not complemented");
  return characteristic(frame, a, frame->pseudocomplement(a));
}

bool leq(const RealFn& f, const RealFn& g) {
  require_same_frame(f, g);
  const FiniteFrame& fr = *f.frame();
  std::vector<Rational> probes = probes_of(f.up(), g.up());
  bool by_up = std::all_of(probes.begin(), probes.end(), [&](const Rational& p) { return fr.leq(f.up_at(p), g.up_at(p)); });
  probes = probes_of(f.down(), g.down());
  bool by_down =
      std::all_of(probes.begin(), probes.end(), [&](const Rational& q) { return fr.leq(g.down_at(q), f.down_at(q)); });
  bool partial = f.fn_class() == FnClass::Partial || g.fn_class() == FnClass::Partial;
  if (!partial && by_up != by_down) {
    throw std::logic_error("order via upper and lower generators disagree on extended functions");
  }
  return by_up && by_down;
}

RealFn add(const RealFn& f, const RealFn& g) {
  require_same_frame(f, g);
  const FiniteFrame& fr = *f.frame();
  return RealFn(f.frame(), sup_convolution(fr, f.up(), g.up()), sup_convolution(fr, f.down(), g.down()));
}

RealFn join_op(const RealFn& f, const RealFn& g) {
  require_same_frame(f, g);
  const FiniteFrame& fr = *f.frame();
  return RealFn(f.frame(), combine(f.up(), g.up(), [&](Element a, Element b) { return fr.join(a, b); }),
                combine(f.down(), g.down(), [&](Element a, Element b) { return fr.meet(a, b); }));
}

RealFn meet_op(const RealFn& f, const RealFn& g) {
  require_same_frame(f, g);
  const FiniteFrame& fr = *f.frame();
  return RealFn(f.frame(), combine(f.up(), g.up(), [&](Element a, Element b) { return fr.meet(a, b); }),
                combine(f.down(), g.down(), [&](Element a, Element b) { return fr.join(a, b); }));
}

RealFn negate(const RealFn& f) { return RealFn(f.frame(), f.down().reflect(), f.up().reflect()); }

RealFn scalar(const Rational& lambda, const RealFn& f) {
  if (lambda == 0) return constant(f.frame(), Rational(0));
  if (lambda < 0) return negate(scalar(Rational(-lambda), f));
  return RealFn(f.frame(), f.up().rescale(lambda), f.down().rescale(lambda));
}

RealFn subtract(const RealFn& f, const RealFn& g) { return add(f, negate(g)); }

RealFn positive_part(const RealFn& f) { return join_op(f, constant(f.frame(), Rational(0))); }

Element coz(const RealFn& f) { return f.frame()->join(f.up_at(Rational(0)), f.down_at(Rational(0))); }

bool is_discrete(const FiniteFrame& frame, std::span<const Element> elements) {
  for (Element y : elements) frame.check_index(y);
  Element cover = frame.bottom();
  for (Element c = 0; c < frame.size(); ++c) {
    std::size_t hits = 0;
    for (Element y : elements) {
      if (frame.meet(c, y) != frame.bottom()) ++hits;
    }
    if (hits <= 1) cover = frame.join(cover, c);
  }
  return cover == frame.top();
}

RealFn discrete_sup(std::span<const RealFn> fs) {
  if (fs.empty()) throw Error(ErrorCode::EmptyFamily, "discrete_sup of an empty family");
  const FramePtr& frame = fs.front().frame();
  RealFn zero = constant(frame, Rational(0));
  std::vector<Element> supports;
  for (const RealFn& f : fs) {
    require_same_frame(fs.front(), f);
    if (!f.is_continuous()) throw Error(ErrorCode::PreconditionFailed, "discrete_sup needs continuous functions");
    if (!leq(zero, f)) throw Error(ErrorCode::NotNonnegative, "member is not >= 0");
    supports.push_back(f.up_at(Rational(0)));
  }
  if (!is_discrete(*frame, supports)) throw Error(ErrorCode::NotDiscrete, "f_i(0,-) do not form a discrete family");
  StepMap sigma = fs.front().up();
  for (std::size_t i = 1; i < fs.size(); ++i) {
    sigma = combine(sigma, fs[i].up(), [&](Element a, Element b) { return frame->join(a, b); });
  }
  return from_scale(Scale{frame, sigma, {}});
}

RealFn compose_hom(const FrameHom& h, const RealFn& f) {
  if (!same_frame(*h.source(), *f.frame())) throw Error(ErrorCode::FrameMismatch, "hom source is not the function's frame");
  auto apply = [&](Element e) { return h(e); };
  return RealFn(h.target(), f.up().map_values(apply), f.down().map_values(apply));
}

RealFn upsilon(const Booleanization& b, const RealFn& f) { return compose_hom(b.beta, f); }

RealFn upsilon(const RealFn& f) { return upsilon(booleanize(f.frame()), f); }

RealFn lift_from_booleanization(const Booleanization& b, const RealFn& g) {
  if (!same_frame(*b.frame, *g.frame())) throw Error(ErrorCode::FrameMismatch, "function is not on the Booleanization");
  const FiniteFrame& l = *b.beta.source();
  // Up segment i is [b_{i-1}, b_i); r > rep(i) ranges over segments i, i+1, ...
  const auto& uv = g.up().values();
  std::vector<Element> up(uv.size());
  Element acc = l.bottom();
  for (std::size_t i = uv.size(); i-- > 0;) {
    acc = l.join(acc, b.embed[uv[i]]);
    up[i] = acc;
  }
  const auto& dv = g.down().values();
  std::vector<Element> down(dv.size());
  acc = l.bottom();
  for (std::size_t i = 0; i < dv.size(); ++i) {
    acc = l.join(acc, b.embed[dv[i]]);
    down[i] = acc;
  }
  return RealFn(b.beta.source(), StepMap(Orientation::Antitone, g.up().breakpoints(), std::move(up)),
                StepMap(Orientation::Isotone, g.down().breakpoints(), std::move(down)));
}

DoubleNegCheck reconstruct_double_neg(const RealFn& f) {
  const FiniteFrame& fr = *f.frame();
  const auto& v = f.up().values();
  std::vector<Rational> reps = segment_representatives(Orientation::Antitone, f.up().breakpoints());
  Element acc = fr.bottom();
  for (std::size_t i = v.size(); i-- > 0;) {
    acc = fr.join(acc, fr.double_pseudocomplement(v[i]));
    if (acc != v[i]) return DoubleNegCheck{false, reps[i]};
  }
  return {};
}

std::vector<Element> interpolation_chain(const FiniteFrame& frame, Element b, Element a) {
  frame.check_index(a);
  frame.check_index(b);
  if (!frame.completely_below(b, a)) throw Error(ErrorCode::PreconditionFailed, "b is not completely below a");
  // A chain with more links than the frame's height must repeat some value.
  std::size_t n = std::size_t{1} << std::bit_width(frame.size());
  std::vector<Element> c(n + 1);
  c[0] = b;
  c[n] = a;
  for (std::size_t step = n / 2; step >= 1; step /= 2) {
    for (std::size_t i = step; i < n; i += 2 * step) {
      Element lo = c[i - step];
      Element hi = c[i + step];
      Element pick = frame.size();
      for (Element x = 0; x < frame.size() && pick == frame.size(); ++x) {
        if (frame.completely_below(lo, x) && frame.completely_below(x, hi)) pick = x;
      }
      if (pick == frame.size()) throw std::logic_error("completely-below relation failed to interpolate");
      c[i] = pick;
    }
  }
  return c;
}

DensityWitness density_witness(const Booleanization& b, const RealFn& h, const Rational& q, Element a,
                               std::span<const Element> chain) {
  if (!same_frame(*b.frame, *h.frame())) throw Error(ErrorCode::FrameMismatch, "h is not on the Booleanization");
  const FramePtr& lp = b.beta.source();
  const FiniteFrame& l = *lp;
  l.check_index(a);
  if (q < 0) throw Error(ErrorCode::PreconditionFailed, "q must be non-negative");
  if (!leq(constant(b.frame, Rational(0)), h)) throw Error(ErrorCode::PreconditionFailed, "h must be non-negative");

  if (q == 0) {
    Scale sigma{lp, StepMap(Orientation::Antitone, {Rational(0)}, {l.top(), l.bottom()}), {}};
    RealFn f = from_scale(sigma);
    return DensityWitness{std::move(sigma), std::move(f)};
  }

  Element target = b.embed[h.up_at(q)];
  if (!l.completely_below(a, target)) throw Error(ErrorCode::PreconditionFailed, "a is not completely below h(q,-)");
  if (chain.empty() || !l.leq(a, chain.front()) || !l.leq(chain.back(), target)) {
    throw Error(ErrorCode::PreconditionFailed, "chain does not run from a to h(q,-)");
  }
  for (Element c : chain) l.check_index(c);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!l.rather_below(chain[i], chain[i + 1])) throw Error(ErrorCode::PreconditionFailed, "chain link is not rather below");
  }
  std::vector<Element> comp;
  for (Element c : chain) {
    if (l.is_complemented(c) && (comp.empty() || comp.back() != c)) comp.push_back(c);
  }
  if (comp.empty()) throw Error(ErrorCode::PreconditionFailed, "chain has no complemented member");

  // 1 below 0, then the complemented members from largest to smallest, then 0 from q on.
  std::size_t m = comp.size();
  std::vector<Rational> breaks;
  std::vector<Element> values{l.top()};
  for (std::size_t i = 0; i <= m; ++i) breaks.push_back(Rational(q * make_rational(static_cast<long>(i), static_cast<long>(m))));
  for (std::size_t i = m; i-- > 0;) values.push_back(comp[i]);
  values.push_back(l.bottom());
  Scale sigma{lp, StepMap(Orientation::Antitone, std::move(breaks), std::move(values)), {}};
  RealFn f = from_scale(sigma);
  return DensityWitness{std::move(sigma), std::move(f)};
}

std::pair<ExtRational, ExtRational> interval_at(const RealFn& f, const std::function<bool(Element)>& xi) {
  const auto& ub = f.up().breakpoints();
  const auto& uv = f.up().values();
  std::size_t j = 0;
  while (j < uv.size() && xi(uv[j])) ++j;
  ExtRational lower = j == 0 ? ExtRational::neg_inf() : j == uv.size() ? ExtRational::pos_inf() : ExtRational(ub[j - 1]);

  const auto& db = f.down().breakpoints();
  const auto& dv = f.down().values();
  std::size_t k = dv.size();
  while (k > 0 && xi(dv[k - 1])) --k;
  ExtRational upper = k == dv.size() ? ExtRational::pos_inf() : k == 0 ? ExtRational::neg_inf() : ExtRational(db[k - 1]);
  return {lower, upper};
}

std::pair<ExtRational, ExtRational> interval_at_prime(const RealFn& f, Element prime) {
  const FiniteFrame& fr = *f.frame();
  fr.check_index(prime);
  return interval_at(f, [&](Element e) { return !fr.leq(e, prime); });
}

std::vector<Element> complemented_elements(const FiniteFrame& frame) {
  std::vector<Element> out;
  for (Element a = 0; a < frame.size(); ++a) {
    if (frame.is_complemented(a)) out.push_back(a);
  }
  return out;
}

namespace {

bool is_boolean_frame(const FiniteFrame& f) { return complemented_elements(f).size() == f.size(); }

}  // namespace

FrameHom boolean_iso_from_riesz_iso(const RieszMap& phi, const FramePtr& l, const FramePtr& m) {
  if (!is_boolean_frame(*l) || !is_boolean_frame(*m)) throw Error(ErrorCode::NotBoolean, "both frames must be Boolean");
  RealFn phi0 = phi(constant(l, Rational(0)));
  if (!same_frame(*phi0.frame(), *m)) throw Error(ErrorCode::OracleNotIso, "oracle does not land in C(M)");
  auto normalized = [&](const RealFn& f) { return subtract(phi(f), phi0); };

  std::vector<RealFn> images;
  std::vector<Element> map(l->size());
  for (Element a = 0; a < l->size(); ++a) {
    images.push_back(normalized(characteristic(l, a)));
    if (!same_frame(*images.back().frame(), *m)) throw Error(ErrorCode::OracleNotIso, "oracle does not land in C(M)");
    map[a] = images.back().up_at(Rational(0));
  }
  for (Element a = 0; a < l->size(); ++a) {
    for (Element b = a + 1; b < l->size(); ++b) {
      RealFn ca = characteristic(l, a);
      RealFn cb = characteristic(l, b);
      if (!(normalized(join_op(ca, cb)) == join_op(images[a], images[b])) ||
          !(normalized(meet_op(ca, cb)) == meet_op(images[a], images[b]))) {
        throw Error(ErrorCode::OracleNotIso, "lattice operations not preserved on characteristic functions");
      }
    }
  }
  try {
    FrameHom hom(l, m, std::move(map));
    if (!hom.is_isomorphism()) throw Error(ErrorCode::OracleNotIso, "induced map is not bijective");
    return hom;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotAHomomorphism) throw Error(ErrorCode::OracleNotIso, e.what());
    throw;
  }
}

}  // namespace pointfree
