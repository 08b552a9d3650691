#pragma once

#include <memory>
#include <vector>

#include "pointfree/interval_fn.hpp"
#include "pointfree/real_fn.hpp"
#include "pointfree/space.hpp"

namespace pointfree {

using SpacePtr = std::shared_ptr<const FiniteSpace>;

/// Per-point extended real value.
struct ExtRealFn {
  SpacePtr space;
  std::vector<ExtRational> values;

  const ExtRational& operator()(std::size_t x) const { return values[x]; }
  friend bool operator==(const ExtRealFn& a, const ExtRealFn& b) { return *a.space == *b.space && a.values == b.values; }
};

/// u(y) >= u(x) for every y in the minimal neighbourhood of x.
bool is_lsc(const ExtRealFn& u);
bool is_usc(const ExtRealFn& u);

/// x -> [lower(x), upper(x)] with lower lower semicontinuous and upper upper semicontinuous.
class IntervalValuedFn {
 public:
  /// Throws EndpointOrder or NotSemicontinuous.
  IntervalValuedFn(SpacePtr space, std::vector<ExtRational> lower, std::vector<ExtRational> upper);

  const SpacePtr& space() const { return space_; }
  const std::vector<ExtRational>& lower() const { return lower_; }
  const std::vector<ExtRational>& upper() const { return upper_; }
  ExtRealFn lower_fn() const { return ExtRealFn{space_, lower_}; }
  ExtRealFn upper_fn() const { return ExtRealFn{space_, upper_}; }

  friend bool operator==(const IntervalValuedFn& a, const IntervalValuedFn& b) {
    return *a.space_ == *b.space_ && a.lower_ == b.lower_ && a.upper_ == b.upper_;
  }

 private:
  SpacePtr space_;
  std::vector<ExtRational> lower_;
  std::vector<ExtRational> upper_;
};

/// Pointwise order on both endpoints.
bool leq(const IntervalValuedFn& f, const IntervalValuedFn& g);
/// Interval inclusion reversed: g's interval lies inside f's at every point.
bool info_leq(const IntervalValuedFn& f, const IntervalValuedFn& g);

/// Checks that frame is (structurally) the open-set frame of the space.
void require_open_frame(const FiniteSpace& space, const FiniteFrame& frame);

/// x -> [sup{r : x in h(r,-)}, inf{r : x in h(-,r)}]. h must live on open_frame(*space).
IntervalValuedFn psi(const SpacePtr& space, const RealFn& h);
/// Inverse of psi; frame must be open_frame of f's space.
RealFn psi_inverse(const FramePtr& frame, const IntervalValuedFn& f);

/// S(u)(x) = max of u over the minimal neighbourhood of x; I(u) the min.
ExtRealFn baire_upper(const ExtRealFn& u);
ExtRealFn baire_lower(const ExtRealFn& u);
/// u = I(S(u)).
bool is_nlsc(const ExtRealFn& u);

/// I(S(u + v)); throws NotNormalLsc, or UndefinedSum where inf meets -inf.
ExtRealFn nl_add(const ExtRealFn& u, const ExtRealFn& v);
/// I(S(lambda u)); lambda = 0 gives the constant 0.
ExtRealFn nl_scalar(const Rational& lambda, const ExtRealFn& u);

/// Points where both endpoints are finite form a dense set.
bool nearly_finite_spatial(const IntervalValuedFn& f);
/// upper = S(lower) and lower = I(upper).
bool is_hausdorff_spatial(const IntervalValuedFn& f);

/// Lower endpoint of a nearly finite Hausdorff function. Throws NotNearlyFinite or NotHausdorff.
ExtRealFn pi(const IntervalValuedFn& f);
/// (u, S(u)) for a nearly finite normal lower semicontinuous u. Throws NotNormalLsc or NotNearlyFinite.
IntervalValuedFn pi_inverse(const ExtRealFn& u);

ExtRealFn constant_ext(const SpacePtr& space, const ExtRational& value);

}  // namespace pointfree
