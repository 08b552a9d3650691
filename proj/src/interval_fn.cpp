#include "pointfree/interval_fn.hpp"

#include <algorithm>

#include "pointfree/enumerate.hpp"

namespace pointfree {

namespace {

std::vector<Rational> probes_of(const StepMap& a, const StepMap& b) {
  const StepMap* maps[] = {&a, &b};
  return probe_points(std::span<const StepMap* const>(maps));
}

void require_hnf(const PartialRealFn& f) {
  if (!f.hausdorff()) throw Error(ErrorCode::NotHausdorff, "function is not Hausdorff");
  if (!f.nearly_finite()) throw Error(ErrorCode::NotNearlyFinite, "function is not nearly finite");
}

// p -> join of m(r)** over r > p (antitone) or r < p (isotone).
StepMap regular_hull(const FiniteFrame& l, const StepMap& m) {
  const auto& v = m.values();
  std::vector<Element> out(v.size());
  Element acc = l.bottom();
  if (m.orientation() == Orientation::Antitone) {
    for (std::size_t i = v.size(); i-- > 0;) {
      acc = l.join(acc, l.double_pseudocomplement(v[i]));
      out[i] = acc;
    }
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) {
      acc = l.join(acc, l.double_pseudocomplement(v[i]));
      out[i] = acc;
    }
  }
  return StepMap(m.orientation(), m.breakpoints(), std::move(out));
}

}  // namespace

bool is_hausdorff(const RealFn& f) {
  const FiniteFrame& l = *f.frame();
  for (const Rational& p : probes_of(f.up(), f.down())) {
    // Worst q > p is q -> p+, worst p < q is p -> q-.
    if (!l.leq(l.pseudocomplement(f.up_at(p)), right_limit(f.down(), p))) return false;
    if (!l.leq(l.pseudocomplement(f.down_at(p)), left_limit(f.up(), p))) return false;
  }
  return true;
}

bool is_nearly_finite(const RealFn& f) {
  const FiniteFrame& l = *f.frame();
  return l.double_pseudocomplement(f.up().leftmost()) == l.top() &&
         l.double_pseudocomplement(f.down().rightmost()) == l.top();
}

PartialRealFn::PartialRealFn(RealFn fn)
    : fn_(std::move(fn)), hausdorff_(is_hausdorff(fn_)), nearly_finite_(is_nearly_finite(fn_)) {}

bool info_leq(const RealFn& f, const RealFn& g) {
  if (!same_frame(*f.frame(), *g.frame())) throw Error(ErrorCode::FrameMismatch, "functions live on different frames");
  const FiniteFrame& l = *f.frame();
  for (const Rational& p : probes_of(f.up(), g.up())) {
    if (!l.leq(f.up_at(p), g.up_at(p))) return false;
  }
  for (const Rational& q : probes_of(f.down(), g.down())) {
    if (!l.leq(f.down_at(q), g.down_at(q))) return false;
  }
  return true;
}

namespace {

// Depth-first search for a monotone sequence s >= base (pointwise), differing from
// base somewhere, with s_i ^ other_i = 0.
bool extend_sequence(const FiniteFrame& l, bool antitone, const std::vector<Element>& base,
                     const std::vector<Element>& other, std::size_t i, bool differs, std::vector<Element>& s) {
  if (i == base.size()) return differs;
  for (Element x = 0; x < l.size(); ++x) {
    if (!l.leq(base[i], x) || l.meet(x, other[i]) != l.bottom()) continue;
    if (i > 0 && !(antitone ? l.leq(x, s[i - 1]) : l.leq(s[i - 1], x))) continue;
    s[i] = x;
    if (extend_sequence(l, antitone, base, other, i + 1, differs || x != base[i], s)) return true;
  }
  return false;
}

}  // namespace

std::optional<RealFn> find_strict_extension(const RealFn& f, const std::vector<Rational>& grid_in) {
  std::vector<Rational> grid = grid_in;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (const StepMap* m : {&f.up(), &f.down()}) {
    for (const Rational& b : m->breakpoints()) {
      if (!std::binary_search(grid.begin(), grid.end(), b)) {
        throw Error(ErrorCode::InvalidArgument, "grid misses breakpoint " + format_rational(b));
      }
    }
  }
  const FiniteFrame& l = *f.frame();
  std::vector<Element> u, w;
  for (const Rational& r : segment_representatives(Orientation::Antitone, grid)) u.push_back(f.up_at(r));
  for (const Rational& r : segment_representatives(Orientation::Isotone, grid)) w.push_back(f.down_at(r));
  // On grid segment i the value pair is (u_i, w_i), so r1 reads u_i ^ w_i = 0. An
  // extension changing both maps can drop either change and stay valid, so it
  // suffices to vary one side at a time.
  std::vector<Element> s(u.size());
  if (extend_sequence(l, true, u, w, 0, false, s)) {
    return RealFn(f.frame(), StepMap(Orientation::Antitone, grid, s), f.down());
  }
  if (extend_sequence(l, false, w, u, 0, false, s)) {
    return RealFn(f.frame(), f.up(), StepMap(Orientation::Isotone, grid, s));
  }
  return std::nullopt;
}

bool is_maximal(const RealFn& f, const std::vector<Rational>& grid) { return !find_strict_extension(f, grid).has_value(); }

RealFn hausdorff_completion(const RealFn& f) {
  const FiniteFrame& l = *f.frame();
  std::vector<Rational> cand = f.up().breakpoints();
  cand.insert(cand.end(), f.down().breakpoints().begin(), f.down().breakpoints().end());
  StepMap down = StepMap::sample(Orientation::Isotone, cand, [&](const Rational& q) {
    return l.join(f.down_at(q), l.pseudocomplement(left_limit(f.up(), q)));
  });
  StepMap up = StepMap::sample(Orientation::Antitone, cand, [&](const Rational& p) {
    return l.join(f.up_at(p), l.pseudocomplement(right_limit(down, p)));
  });
  return RealFn(f.frame(), std::move(up), std::move(down));
}

RealFn gamma(const Booleanization& b, const PartialRealFn& f) {
  if (!f.hausdorff()) throw Error(ErrorCode::NotHausdorff, "gamma needs a Hausdorff function");
  return compose_hom(b.beta, f.fn());
}

PartialRealFn delta(const Booleanization& b, const RealFn& g) { return PartialRealFn(lift_from_booleanization(b, g)); }

PartialRealFn hnf_add(const PartialRealFn& f, const PartialRealFn& g) {
  require_hnf(f);
  require_hnf(g);
  if (!same_frame(*f.frame(), *g.frame())) throw Error(ErrorCode::FrameMismatch, "functions live on different frames");
  const FiniteFrame& l = *f.frame();
  StepMap up = regular_hull(l, sup_convolution(l, f.up(), g.up()));
  StepMap down = regular_hull(l, sup_convolution(l, f.down(), g.down()));
  return PartialRealFn(f.frame(), std::move(up), std::move(down));
}

PartialRealFn hnf_negate(const PartialRealFn& f) {
  require_hnf(f);
  return PartialRealFn(negate(f.fn()));
}

PartialRealFn hnf_scalar(const Rational& lambda, const PartialRealFn& f) {
  require_hnf(f);
  if (lambda == 0) return PartialRealFn(constant(f.frame(), Rational(0)));
  if (lambda < 0) return hnf_negate(hnf_scalar(Rational(-lambda), f));
  return PartialRealFn(f.frame(), f.up().rescale(lambda), f.down().rescale(lambda));
}

bool nearly_finite_check(const Booleanization& b, const PartialRealFn& f) {
  if (!same_frame(*b.beta.source(), *f.frame())) throw Error(ErrorCode::FrameMismatch, "Booleanization of another frame");
  bool in_l = is_nearly_finite(f.fn());
  const FiniteFrame& bf = *b.frame;
  Element up_join = bf.bottom();
  for (Element v : f.up().values()) up_join = bf.join(up_join, b.beta(v));
  Element down_join = bf.bottom();
  for (Element v : f.down().values()) down_join = bf.join(down_join, b.beta(v));
  bool in_b = up_join == bf.top() && down_join == bf.top();
  if (in_l != in_b) throw std::logic_error("near finiteness differs between L and its Booleanization");
  return in_l;
}

bool nearly_finite_check(const PartialRealFn& f) { return nearly_finite_check(booleanize(f.frame()), f); }

RealFn squash_precompose(const RealFn& f) {
  auto pull = [](const StepMap& m) {
    std::vector<Rational> cand;
    for (const Rational& b : m.breakpoints()) {
      if (b > -1 && b < 1) cand.push_back(unsquash(b));
    }
    return StepMap::sample(m.orientation(), std::move(cand), [&](const Rational& p) { return m(squash(p)); });
  };
  return RealFn(f.frame(), pull(f.up()), pull(f.down()));
}

const char* to_string(TrichotomyReport::Branch b) {
  switch (b) {
    case TrichotomyReport::Branch::Certificate:
      return "certificate";
    case TrichotomyReport::Branch::ChiWitness:
      return "chi_witness";
    case TrichotomyReport::Branch::DenseCozeroWitness:
      return "dense_cozero_witness";
  }
  return "?";
}

TrichotomyReport trichotomy_witness(const FramePtr& frame, const std::vector<Rational>& grid) {
  const FiniteFrame& l = *frame;
  TrichotomyReport report;
  Classification cls = classify(l);

  if (!cls.extremally_disconnected.holds) {
    Element a = cls.extremally_disconnected.witnesses.front();
    RealFn chi = characteristic(frame, l.pseudocomplement(a), l.double_pseudocomplement(a));
    PartialRealFn pf(chi);
    report.branch = TrichotomyReport::Branch::ChiWitness;
    report.element = a;
    report.verified = pf.hausdorff() && nearly_finite_check(pf) && !chi.is_continuous();
    report.detail = "a* v a** != 1; chi_{a*,a**} is nearly finite Hausdorff but not continuous";
    report.witness = std::move(chi);
    return report;
  }

  for (Element a = 0; a < l.size(); ++a) {
    if (a == l.top() || !l.is_dense(a) || !is_cozero(l, a)) continue;
    report.branch = TrichotomyReport::Branch::DenseCozeroWitness;
    report.element = a;
    // A cozero element is complemented here, so chi_{a,a*} realizes it; then
    // f = (-h ^ h) + 1 has 0 <= f <= 1 and f(-,1) = a.
    RealFn h = characteristic(frame, a, l.pseudocomplement(a));
    RealFn f = add(meet_op(negate(h), h), constant(frame, Rational(1)));
    RealFn g = squash_precompose(f);
    PartialRealFn pg(g);
    report.verified = coz(h) == a && f.down_at(Rational(1)) == a && pg.hausdorff() && !g.is_continuous() &&
                      leq(constant(frame, Rational(0)), f) && leq(f, constant(frame, Rational(1)));
    report.detail = "dense cozero a != 1; f(alpha(p),-) rescaling leaves the continuous functions";
    report.witness = std::move(g);
    return report;
  }

  // Extremally disconnected P-frame: every nearly finite Hausdorff grid function
  // must be continuous. A Hausdorff function has down values u_i* on grid
  // segment i, so enumerating antitone up sequences covers them all.
  report.branch = TrichotomyReport::Branch::Certificate;
  std::vector<Rational> g = grid;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Element> all(l.size());
  for (Element a = 0; a < l.size(); ++a) all[a] = a;
  bool ok = true;
  for_each_antitone_chain(l, g.size() + 1, all, std::nullopt, std::nullopt, [&](const std::vector<Element>& u) {
    std::vector<Element> w;
    for (Element v : u) w.push_back(l.pseudocomplement(v));
    RealFn fn(frame, StepMap(Orientation::Antitone, g, u), StepMap(Orientation::Isotone, g, std::move(w)));
    if (!is_hausdorff(fn) || !is_nearly_finite(fn)) return;
    ++report.enumerated;
    if (!fn.is_continuous()) {
      ok = false;
      if (!report.witness) report.witness = fn;
    }
  });
  report.verified = ok && report.enumerated > 0;
  report.detail = "extremally disconnected P-frame; every nearly finite Hausdorff grid function is continuous";
  return report;
}

}  // namespace pointfree
