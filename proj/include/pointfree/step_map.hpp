#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pointfree/frame.hpp"
#include "pointfree/rational.hpp"

namespace pointfree {

/// Antitone maps are right-continuous (value on [b_{i-1}, b_i));
/// isotone maps are left-continuous (value on (b_{i-1}, b_i]).
enum class Orientation { Antitone, Isotone };

/// Piecewise-constant map from the rationals into a frame with finitely many
/// rational breakpoints.
///
/// With breakpoints b_0 < ... < b_{k-1} there are k+1 values; value i is taken
/// on the i-th segment in the sense fixed by the orientation. The map is kept in
/// canonical form: adjacent values differ, so breakpoints are exactly the
/// points where the value changes.
class StepMap {
 public:
  StepMap(Orientation orientation, std::vector<Rational> breakpoints, std::vector<Element> values);

  static StepMap constant(Orientation orientation, Element value) { return StepMap(orientation, {}, {value}); }

  /// Builds a map by evaluating fn once per segment of the given candidate breakpoints.
  /// The candidates need not be sorted or unique.
  static StepMap sample(Orientation orientation, std::vector<Rational> candidates,
                        const std::function<Element(const Rational&)>& fn);

  Orientation orientation() const { return orientation_; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Element>& values() const { return values_; }
  Element leftmost() const { return values_.front(); }
  Element rightmost() const { return values_.back(); }

  std::size_t segment(const Rational& p) const;
  Element operator()(const Rational& p) const { return values_[segment(p)]; }

  /// Applies fn to every value.
  StepMap map_values(const std::function<Element(Element)>& fn) const;
  /// p -> M(-p); flips the orientation.
  StepMap reflect() const;
  /// p -> M(p / lambda) for lambda > 0.
  StepMap rescale(const Rational& lambda) const;
  /// p -> M(p - delta).
  StepMap shift(const Rational& delta) const;

  /// Values weakly decrease (antitone) or increase (isotone) in the frame order.
  bool is_monotone(const FiniteFrame& frame) const;

  friend bool operator==(const StepMap&, const StepMap&) = default;

 private:
  void canonicalize();

  Orientation orientation_;
  std::vector<Rational> breakpoints_;
  std::vector<Element> values_;
};

/// One representative rational inside every segment induced by the candidates.
std::vector<Rational> segment_representatives(Orientation orientation, const std::vector<Rational>& sorted_breakpoints);

/// Pointwise combination of two maps with the same orientation.
StepMap combine(const StepMap& a, const StepMap& b, const std::function<Element(Element, Element)>& op);

/// Sorted probe set for a family of maps: every breakpoint, two interior points
/// in each gap, and two points beyond each end. Any relation between values at
/// p and q that depends only on the segments containing p and q is decided by
/// checking it over all pairs of probes.
std::vector<Rational> probe_points(std::span<const StepMap* const> maps);
std::vector<Rational> probe_points(std::vector<Rational> breakpoints);

/// p -> join over all rationals t of a(t) ^ b(p - t), for two maps of the same
/// orientation. Breakpoints of the result lie among the pairwise sums of the inputs'.
StepMap sup_convolution(const FiniteFrame& frame, const StepMap& a, const StepMap& b);

/// Value of an antitone map just left of q (the join of M(p) over p < q).
Element left_limit(const StepMap& m, const Rational& q);
/// Value of an isotone map just right of p (the join of M(q) over q > p).
Element right_limit(const StepMap& m, const Rational& p);

}  // namespace pointfree
