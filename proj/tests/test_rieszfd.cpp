#include <gtest/gtest.h>

#include "pointfree/riesz.hpp"

using namespace pointfree;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
RieszVec v(std::initializer_list<Rational> c) { return RieszVec(std::vector<Rational>(c)); }

}  // namespace

TEST(Bands, Generated) {
  EXPECT_TRUE(band_generated(v({q(0), q(0)})).support.empty());
  EXPECT_EQ(band_generated(v({q(2), q(-1)})).support, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(band_oracle_member(v({q(5), q(0)}), v({q(1), q(0)}), 8));
  EXPECT_FALSE(band_oracle_member(v({q(0), q(1)}), v({q(1), q(0)}), 8));
}

TEST(WeakUnit, Examples) {
  EXPECT_TRUE(is_weak_unit(v({q(1), q(1), q(1)})));
  EXPECT_FALSE(is_weak_unit(v({q(1), q(0)})));
  EXPECT_TRUE(is_weak_unit(v({q(1), q(2), q(1, 3)})));
  EXPECT_THROW(is_weak_unit(v({q(0), q(0)})), Error);
  EXPECT_THROW(is_weak_unit(v({q(-1), q(1)})), Error);
}

TEST(BandScale, Examples) {
  // Subsets of {0,1} as bitmasks.
  Scale s = band_scale(v({q(2), q(-1)}), v({q(1), q(1)}));
  EXPECT_EQ(s(q(-2)), 3u);
  EXPECT_EQ(s(q(-1)), 1u);
  EXPECT_EQ(s(q(1)), 1u);
  EXPECT_EQ(s(q(2)), 0u);
  Scale e = band_scale(v({q(1), q(1)}), v({q(1), q(1)}));
  EXPECT_EQ(e(q(99, 100)), 3u);
  EXPECT_EQ(e(q(1)), 0u);
  Scale z = band_scale(v({q(0), q(0)}), v({q(1), q(1)}));
  EXPECT_EQ(z(q(-1, 100)), 3u);
  EXPECT_EQ(z(q(0)), 0u);
  EXPECT_THROW(band_scale(v({q(1)}), v({q(1), q(1)})), Error);
}

TEST(Embedding, AtomValues) {
  RieszVec e = v({q(1), q(2), q(1, 3)});
  RieszVec f = v({q(3), q(-1), q(1)});
  RealFn m = m_embed(f, e);
  EXPECT_TRUE(m.is_continuous());
  std::vector<Rational> want{q(3), q(-1, 2), q(3)};
  for (std::size_t i = 0; i < 3; ++i) {
    auto [lo, hi] = atom_value(m, i);
    EXPECT_EQ(lo, ExtRational(want[i]));
    EXPECT_EQ(hi, ExtRational(want[i]));
  }
}

TEST(Sandwich, Examples) {
  RieszVec e = v({q(1), q(1)});
  RealFn g = m_embed(v({q(2), q(1)}), e);
  auto [f, h] = sandwich_check(g, e);
  EXPECT_TRUE(leq(m_embed(f, e), g));
  EXPECT_TRUE(leq(g, m_embed(h, e)));
  EXPECT_FALSE(f.is_zero());

  // chi of the first atom.
  RealFn chi = characteristic(coordinate_frame(2), 1);
  auto [f2, h2] = sandwich_check(chi, e);
  EXPECT_EQ(band_generated(f2).support, (std::vector<std::size_t>{0}));
  EXPECT_TRUE(leq(m_embed(f2, e), chi));
  EXPECT_TRUE(leq(chi, m_embed(h2, e)));
  EXPECT_THROW(sandwich_check(constant(coordinate_frame(2), q(0)), e), Error);
}

TEST(BandAlgebra, SmallDimensions) {
  const std::vector<Rational> grid{q(-1), q(0), q(1)};
  for (std::size_t n = 1; n <= 3; ++n) {
    BandAlgebraResult r = band_algebra_check(n, grid);
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_EQ(r.bands, std::size_t{1} << n);
  }
}
