#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pointfree/frame.hpp"
#include "pointfree/rational.hpp"
#include "pointfree/step_map.hpp"

namespace pointfree {

/// Which relations among r2, r5, r6 the generator images satisfy (r1, r3 and r4
/// always hold for a constructed function).
enum class FnClass {
  Continuous,          ///< r2, r5 and r6: an element of C(L)
  ExtendedContinuous,  ///< r2 only
  Partial,             ///< neither r2 nor both of r5 and r6
};

const char* to_string(FnClass c);

/// A homomorphism from the frame of (extended, partial) reals into a finite
/// frame, stored by its images of the generators:
/// up(p) is the image of (p, -) and down(q) the image of (-, q).
class RealFn {
 public:
  /// Throws NotMonotone or RelationViolated (r1) when the pair does not define a homomorphism.
  RealFn(FramePtr frame, StepMap up, StepMap down);

  const FramePtr& frame() const { return frame_; }
  const StepMap& up() const { return up_; }
  const StepMap& down() const { return down_; }
  FnClass fn_class() const { return class_; }
  bool is_continuous() const { return class_ == FnClass::Continuous; }

  Element up_at(const Rational& p) const { return up_(p); }
  Element down_at(const Rational& q) const { return down_(q); }

  friend bool operator==(const RealFn& a, const RealFn& b) {
    return same_frame(*a.frame_, *b.frame_) && a.up_ == b.up_ && a.down_ == b.down_;
  }

 private:
  FramePtr frame_;
  StepMap up_;
  StepMap down_;
  FnClass class_;
};

/// Antitone map into a frame; point values override the step values at single
/// rationals (they never affect the induced function).
struct Scale {
  FramePtr frame;
  StepMap steps;
  std::vector<std::pair<Rational, Element>> points;

  Element operator()(const Rational& p) const;
  /// sigma(q) rather below sigma(p) whenever p < q.
  bool is_extended_scale() const;
  /// Extended scale whose values join to 1 and whose pseudocomplements join to 1.
  bool is_scale() const;
};

/// f(p,-) = join of sigma(r), r > p; f(-,q) = join of sigma(r)*, r < q.
RealFn from_scale(const Scale& sigma);

RealFn constant(const FramePtr& frame, const Rational& r);

/// chi_{a,b}: a on [0,1) for the upper generators, b on (0,1] for the lower ones.
/// Throws MeetNotZero unless a ^ b = 0.
RealFn characteristic(const FramePtr& frame, Element a, Element b);
/// chi_a = chi_{a, a*} for a complemented element.
RealFn characteristic(const FramePtr& frame, Element a);

/// f <= g. For continuous and extended functions the upper-generator and
/// lower-generator comparisons coincide; for partial functions both are required.
bool leq(const RealFn& f, const RealFn& g);

RealFn add(const RealFn& f, const RealFn& g);
RealFn join_op(const RealFn& f, const RealFn& g);
RealFn meet_op(const RealFn& f, const RealFn& g);
RealFn negate(const RealFn& f);
/// Any rational lambda: rescaling for lambda > 0, the constant 0 for lambda = 0,
/// and negate(scalar(-lambda, f)) for lambda < 0.
RealFn scalar(const Rational& lambda, const RealFn& f);
RealFn subtract(const RealFn& f, const RealFn& g);
/// f v 0.
RealFn positive_part(const RealFn& f);

/// f(-,0) v f(0,-).
Element coz(const RealFn& f);

/// The family admits a cover each of whose members meets at most one element of it.
bool is_discrete(const FiniteFrame& frame, std::span<const Element> elements);

/// Supremum of non-negative continuous functions whose f(0,-) images form a discrete family.
/// Throws EmptyFamily, NotNonnegative, NotDiscrete or PreconditionFailed (non-continuous input).
RealFn discrete_sup(std::span<const RealFn> fs);

/// h . f for a frame homomorphism h out of f's frame.
RealFn compose_hom(const FrameHom& h, const RealFn& f);

struct Booleanization;

/// beta . f, the embedding into functions on the Booleanization.
RealFn upsilon(const Booleanization& b, const RealFn& f);
RealFn upsilon(const RealFn& f);

/// g(p,-) = join in L of g(r,-), r > p, and dually for the lower generators, for g on
/// the Booleanization. Recovers f from upsilon(f) for continuous f.
RealFn lift_from_booleanization(const Booleanization& b, const RealFn& g);

/// Checks f(p,-) = join of f(r,-)**, r > p, on every segment.
struct DoubleNegCheck {
  bool ok = true;
  std::optional<Rational> witness;
};
DoubleNegCheck reconstruct_double_neg(const RealFn& f);

/// Dyadic interpolation chain b = c_0 <= ... <= c_N = a inside the completely-below
/// relation, deep enough that some adjacent pair repeats. Throws PreconditionFailed
/// unless b is completely below a.
std::vector<Element> interpolation_chain(const FiniteFrame& frame, Element b, Element a);

struct DensityWitness {
  Scale sigma;
  RealFn f;
};

/// The scale that is 1 below 0, runs through the complemented members of the chain
/// (largest first) on equal subintervals of [0, q), and is 0 from q on.
/// h is a non-negative function on the Booleanization of L, a an element of L.
/// Throws PreconditionFailed unless a is completely below h(q,-) read in L and the chain
/// is a valid interpolation chain from a to h(q,-) containing a complemented element.
DensityWitness density_witness(const Booleanization& b, const RealFn& h, const Rational& q, Element a,
                               std::span<const Element> chain);

/// Interval [sup{r : xi(f(r,-)) = 1}, inf{r : xi(f(-,r)) = 1}] of f at a two-valued point xi.
std::pair<ExtRational, ExtRational> interval_at(const RealFn& f, const std::function<bool(Element)>& xi);
/// Same for the point of the spectrum given by a prime element.
std::pair<ExtRational, ExtRational> interval_at_prime(const RealFn& f, Element prime);

/// A lattice isomorphism C(L) -> C(M), supplied as a callable.
using RieszMap = std::function<RealFn(const RealFn&)>;

/// phi(a) = Phi'(chi_a)(0,-) with Phi'(f) = Phi(f) - Phi(0). Throws NotBoolean or OracleNotIso.
FrameHom boolean_iso_from_riesz_iso(const RieszMap& phi, const FramePtr& l, const FramePtr& m);

/// Indices of the complemented elements, ascending.
std::vector<Element> complemented_elements(const FiniteFrame& frame);

}  // namespace pointfree
