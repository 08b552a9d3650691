#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pointfree/real_fn.hpp"

namespace pointfree {

/// up(p)* <= down(q) and down(q)* <= up(p) for all p < q.
bool is_hausdorff(const RealFn& f);

/// (join of the up values)** = 1 = (join of the down values)**.
bool is_nearly_finite(const RealFn& f);

/// A function into the frame of extended partial reals, with cached flags.
class PartialRealFn {
 public:
  explicit PartialRealFn(RealFn fn);
  PartialRealFn(FramePtr frame, StepMap up, StepMap down) : PartialRealFn(RealFn(std::move(frame), std::move(up), std::move(down))) {}

  const RealFn& fn() const { return fn_; }
  const FramePtr& frame() const { return fn_.frame(); }
  const StepMap& up() const { return fn_.up(); }
  const StepMap& down() const { return fn_.down(); }
  bool hausdorff() const { return hausdorff_; }
  bool nearly_finite() const { return nearly_finite_; }

  friend bool operator==(const PartialRealFn& a, const PartialRealFn& b) { return a.fn_ == b.fn_; }

 private:
  RealFn fn_;
  bool hausdorff_;
  bool nearly_finite_;
};

/// Information order: f(p,-) <= g(p,-) and f(-,q) <= g(-,q) everywhere.
bool info_leq(const RealFn& f, const RealFn& g);

/// Some g on the grid with f strictly below g in the information order, if any.
/// The grid must contain every breakpoint of f (InvalidArgument otherwise).
std::optional<RealFn> find_strict_extension(const RealFn& f, const std::vector<Rational>& grid);
bool is_maximal(const RealFn& f, const std::vector<Rational>& grid);

/// Smallest Hausdorff function above f in the information order that keeps f's
/// up values and only enlarges down values where forced, then closes up values.
RealFn hausdorff_completion(const RealFn& f);

/// beta . f for Hausdorff f. Throws NotHausdorff or FrameMismatch.
RealFn gamma(const Booleanization& b, const PartialRealFn& f);
/// Joins in L of the images of g(r,-), r > p, and g(-,s), s < q.
PartialRealFn delta(const Booleanization& b, const RealFn& g);

/// Sum, scalar multiple and negative for nearly finite Hausdorff functions, by the
/// double-pseudocomplement join formulas. Throw NotNearlyFinite or NotHausdorff.
PartialRealFn hnf_add(const PartialRealFn& f, const PartialRealFn& g);
PartialRealFn hnf_scalar(const Rational& lambda, const PartialRealFn& f);
PartialRealFn hnf_negate(const PartialRealFn& f);

/// Evaluates both the L form and the Booleanization form of near finiteness and
/// throws std::logic_error if they disagree.
bool nearly_finite_check(const Booleanization& b, const PartialRealFn& f);
bool nearly_finite_check(const PartialRealFn& f);

/// g(p,-) = f(alpha(p),-), g(-,q) = f(-,alpha(q)) with alpha(p) = p / (1 + |p|).
RealFn squash_precompose(const RealFn& f);

/// Which of the three situations separating continuous from nearly finite Hausdorff
/// functions a frame is in, with a machine-checked witness.
struct TrichotomyReport {
  enum class Branch { Certificate, ChiWitness, DenseCozeroWitness };
  Branch branch = Branch::Certificate;
  /// The element a behind a witness.
  std::optional<Element> element;
  std::optional<RealFn> witness;
  /// Hausdorff nearly finite grid functions enumerated for the certificate.
  std::size_t enumerated = 0;
  bool verified = false;
  std::string detail;
};

const char* to_string(TrichotomyReport::Branch b);

TrichotomyReport trichotomy_witness(const FramePtr& frame, const std::vector<Rational>& grid);

}  // namespace pointfree
