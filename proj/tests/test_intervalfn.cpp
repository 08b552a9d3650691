#include <gtest/gtest.h>

#include <random>

#include "pointfree/enumerate.hpp"
#include "pointfree/interval_fn.hpp"

using namespace pointfree;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

RealFn everywhere_undefined(const FramePtr& l) {
  return RealFn(l, StepMap::constant(Orientation::Antitone, l->bottom()), StepMap::constant(Orientation::Isotone, l->bottom()));
}

}  // namespace

TEST(Hausdorff, Examples) {
  for (const FramePtr& fp : all_frames(6)) {
    const FiniteFrame& l = *fp;
    for (Element a = 0; a < l.size(); ++a) {
      RealFn chi = characteristic(fp, l.pseudocomplement(a), l.double_pseudocomplement(a));
      EXPECT_TRUE(is_hausdorff(chi));
      // (a* v a**)* = a** ^ a*** = 0, so the function is always nearly finite.
      EXPECT_TRUE(is_nearly_finite(chi));
    }
    if (l.size() > 1) {
      EXPECT_FALSE(is_hausdorff(everywhere_undefined(fp)));
      EXPECT_FALSE(is_nearly_finite(everywhere_undefined(fp)));
    }
  }
  EXPECT_TRUE(is_hausdorff(constant(chain_frame(3), q(1))));
}

TEST(Hausdorff, ContinuousFunctionsAreHausdorffAndNearlyFinite) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    FramePtr l = random_frame(rng, 8);
    RealFn f = random_continuous(rng, l);
    EXPECT_TRUE(is_hausdorff(f));
    EXPECT_TRUE(is_nearly_finite(f));
  }
}

TEST(Maximality, SearchAgreesWithExhaustiveScan) {
  // Oracle: scan every grid function for a strict information extension.
  const std::vector<Rational> grid{q(0), q(1)};
  for (const FramePtr& fp : all_frames(5)) {
    std::vector<RealFn> all;
    for_each_partial_grid_function(fp, grid, [&](const RealFn& f) { all.push_back(f); });
    for (const RealFn& f : all) {
      bool extendable = false;
      for (const RealFn& g : all) extendable = extendable || (info_leq(f, g) && !(f == g));
      ASSERT_EQ(!is_maximal(f, grid), extendable);
      EXPECT_EQ(is_hausdorff(f), !extendable);
    }
  }
}

TEST(Maximality, GridMustCoverBreakpoints) {
  FramePtr c = chain_frame(3);
  EXPECT_THROW(find_strict_extension(constant(c, q(1, 3)), {q(0)}), Error);
}

TEST(Completion, IsHausdorffAndAbove) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    FramePtr l = random_frame(rng, 8);
    RealFn f = random_partial(rng, l);
    RealFn h = hausdorff_completion(f);
    EXPECT_TRUE(is_hausdorff(h));
    EXPECT_TRUE(info_leq(f, h));
    if (is_hausdorff(f)) EXPECT_EQ(h, f);
  }
}

TEST(GammaDelta, BooleanFramesAreFixed) {
  FramePtr l = powerset_frame(2);
  Booleanization b = booleanize(l);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    RealFn f = random_continuous(rng, l);
    EXPECT_EQ(gamma(b, PartialRealFn(f)), f);
    EXPECT_EQ(delta(b, f).fn(), f);
  }
}

TEST(GammaDelta, RejectsNonHausdorff) {
  FramePtr c = chain_frame(3);
  Booleanization b = booleanize(c);
  try {
    gamma(b, PartialRealFn(everywhere_undefined(c)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHausdorff);
  }
}

TEST(HnfOps, RejectBadInputs) {
  FramePtr c = chain_frame(3);
  PartialRealFn u(everywhere_undefined(c));
  PartialRealFn one(constant(c, q(1)));
  EXPECT_THROW(hnf_add(u, one), Error);
  EXPECT_EQ(hnf_scalar(q(0), one).fn(), constant(c, q(0)));
  EXPECT_EQ(hnf_negate(one).fn(), constant(c, q(-1)));
}

TEST(Squash, OrderIsomorphismOntoUnitInterval) {
  for (long k = -40; k <= 40; ++k) {
    Rational p = make_rational(k, 3);
    Rational s = squash(p);
    EXPECT_LT(s, 1);
    EXPECT_GT(s, -1);
    EXPECT_EQ(unsquash(s), p);
    EXPECT_LT(s, squash(make_rational(k + 1, 3)));
  }
}

TEST(Trichotomy, Examples) {
  const std::vector<Rational> grid{q(-1), q(0), q(1)};
  TrichotomyReport r = trichotomy_witness(powerset_frame(2), grid);
  EXPECT_EQ(r.branch, TrichotomyReport::Branch::Certificate);
  EXPECT_TRUE(r.verified);

  // Opens of a 3-point space whose two closed points are open singletons.
  FiniteSpace s(3, {0b000, 0b001, 0b010, 0b011, 0b111});
  TrichotomyReport w = trichotomy_witness(open_frame(s), grid);
  EXPECT_EQ(w.branch, TrichotomyReport::Branch::ChiWitness);
  EXPECT_TRUE(w.verified);
  ASSERT_TRUE(w.witness.has_value());
  EXPECT_FALSE(w.witness->is_continuous());
}
