#include <gtest/gtest.h>

#include <random>

#include "pointfree/enumerate.hpp"
#include "pointfree/spatial.hpp"

using namespace pointfree;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Points x = 0, y = 1; opens {}, {x}, X.
SpacePtr sierpinski() { return std::make_shared<const FiniteSpace>(2, std::vector<PointSet>{0b00, 0b01, 0b11}); }

ExtRational inf() { return ExtRational::pos_inf(); }
ExtRational ninf() { return ExtRational::neg_inf(); }

}  // namespace

TEST(Psi, ConstantsAndRoundTrip) {
  SpacePtr s = sierpinski();
  FramePtr f = open_frame(*s);
  IntervalValuedFn c = psi(s, constant(f, q(3, 2)));
  EXPECT_EQ(c.lower(), (std::vector<ExtRational>{q(3, 2), q(3, 2)}));
  EXPECT_EQ(c.upper(), c.lower());
  EXPECT_EQ(psi_inverse(f, c), constant(f, q(3, 2)));
}

TEST(Psi, CharacteristicOnSierpinski) {
  // chi_{{x}, {}}: x lies in the up images below 1, y only below 0; both lie in
  // the down images only above 1.
  SpacePtr s = sierpinski();
  FramePtr f = open_frame(*s);
  RealFn chi = characteristic(f, 1, 0);
  IntervalValuedFn v = psi(s, chi);
  EXPECT_EQ(v.lower(), (std::vector<ExtRational>{q(1), q(0)}));
  EXPECT_EQ(v.upper(), (std::vector<ExtRational>{q(1), q(1)}));
}

TEST(Semicontinuity, Validation) {
  SpacePtr s = sierpinski();
  // The neighbourhood of y contains x, so a lower endpoint needs u(x) >= u(y).
  EXPECT_THROW(IntervalValuedFn(s, {q(0), q(1)}, {inf(), inf()}), Error);
  EXPECT_THROW(IntervalValuedFn(s, {q(2), q(2)}, {q(1), q(1)}), Error);
  EXPECT_NO_THROW(IntervalValuedFn(s, {q(1), q(0)}, {q(1), q(1)}));
}

TEST(Baire, Examples) {
  SpacePtr s = sierpinski();
  ExtRealFn u{s, {q(1), q(0)}};
  EXPECT_TRUE(is_lsc(u));
  EXPECT_EQ(baire_upper(u).values, (std::vector<ExtRational>{q(1), q(1)}));
  EXPECT_EQ(baire_lower(baire_upper(u)).values, (std::vector<ExtRational>{q(1), q(1)}));
  EXPECT_FALSE(is_nlsc(u));
  ExtRealFn k = constant_ext(s, q(2));
  EXPECT_EQ(baire_upper(k), k);
  EXPECT_EQ(baire_lower(k), k);
  SpacePtr d = std::make_shared<const FiniteSpace>(2, std::vector<PointSet>{0, 1, 2, 3});
  ExtRealFn w{d, {q(5), q(-1)}};
  EXPECT_EQ(baire_upper(w), w);
  EXPECT_EQ(baire_lower(w), w);
}

TEST(Pi, DropsAndRestoresUpperEndpoint) {
  // On the Sierpinski space Hausdorff functions are constant, so use three points:
  // x, y open singletons, z closed with neighbourhood X.
  auto s = std::make_shared<const FiniteSpace>(3, std::vector<PointSet>{0b000, 0b001, 0b010, 0b011, 0b111});
  IntervalValuedFn f(s, {q(1), q(0), q(0)}, {q(1), q(0), q(1)});
  EXPECT_TRUE(is_hausdorff_spatial(f));
  EXPECT_TRUE(nearly_finite_spatial(f));
  ExtRealFn u = pi(f);
  EXPECT_EQ(u.values, (std::vector<ExtRational>{q(1), q(0), q(0)}));
  EXPECT_EQ(pi_inverse(u), f);
  // Sierpinski: a non-constant lower endpoint is not normal.
  EXPECT_FALSE(is_hausdorff_spatial(IntervalValuedFn(sierpinski(), {q(1), q(0)}, {q(1), q(1)})));
}

TEST(Pi, ContinuousIsFixed) {
  SpacePtr s = sierpinski();
  FramePtr f = open_frame(*s);
  IntervalValuedFn c = psi(s, constant(f, q(2)));
  EXPECT_EQ(pi(c).values, c.lower());
}

TEST(NearlyFinite, Examples) {
  SpacePtr s = sierpinski();
  EXPECT_TRUE(nearly_finite_spatial(IntervalValuedFn(s, {q(0), q(0)}, {q(0), q(0)})));
  EXPECT_FALSE(nearly_finite_spatial(IntervalValuedFn(s, {ninf(), ninf()}, {inf(), inf()})));
  // Finite exactly on {x}, which is dense.
  EXPECT_TRUE(nearly_finite_spatial(IntervalValuedFn(s, {q(0), ninf()}, {q(0), inf()})));
}

TEST(NlOps, UndefinedSumAndScalars) {
  SpacePtr d = std::make_shared<const FiniteSpace>(2, std::vector<PointSet>{0, 1, 2, 3});
  ExtRealFn a{d, {inf(), q(0)}}, b{d, {ninf(), q(1)}};
  EXPECT_THROW(nl_add(a, b), Error);
  ExtRealFn c{d, {q(1), q(2)}};
  EXPECT_EQ(nl_scalar(q(0), a).values, (std::vector<ExtRational>{q(0), q(0)}));
  EXPECT_EQ(nl_scalar(q(2), c).values, (std::vector<ExtRational>{q(2), q(4)}));
  EXPECT_EQ(nl_add(c, c).values, (std::vector<ExtRational>{q(2), q(4)}));
}

TEST(Orders, AgreeThroughPsi) {
  std::mt19937_64 rng(17);
  for (const FiniteSpace& sp : all_spaces(3)) {
    auto s = std::make_shared<const FiniteSpace>(sp);
    FramePtr f = open_frame(sp);
    for (int k = 0; k < 30; ++k) {
      RealFn a = random_partial(rng, f), b = random_partial(rng, f);
      IntervalValuedFn pa = psi(s, a), pb = psi(s, b);
      // Direct pointwise oracle for both orders.
      bool le = true, info = true;
      for (std::size_t x = 0; x < sp.point_count(); ++x) {
        le = le && pa.lower()[x] <= pb.lower()[x] && pa.upper()[x] <= pb.upper()[x];
        info = info && pa.lower()[x] <= pb.lower()[x] && pb.upper()[x] <= pa.upper()[x];
      }
      EXPECT_EQ(leq(pa, pb), le);
      EXPECT_EQ(info_leq(pa, pb), info);
      EXPECT_EQ(leq(a, b), le);
      EXPECT_EQ(info_leq(a, b), info);
    }
  }
}
