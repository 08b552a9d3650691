#include <gtest/gtest.h>

#include "pointfree/enumerate.hpp"
#include "pointfree/frame.hpp"
#include "pointfree/space.hpp"

using namespace pointfree;

namespace {

// Sierpinski opens as the downsets of the 2-chain poset: {}, {0}, {0,1}.
FramePtr sierpinski() {
  Relation p(2);
  p.set(0, 0);
  p.set(1, 1);
  p.set(0, 1);
  return downset_frame(p);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(FrameBuild, ChainAndDiamondAreFrames) {
  FramePtr c = chain_frame(3);
  EXPECT_EQ(c->size(), 3u);
  EXPECT_EQ(c->bottom(), 0u);
  EXPECT_EQ(c->top(), 2u);
  FramePtr d = powerset_frame(2);
  EXPECT_EQ(d->join(1, 2), 3u);
  EXPECT_EQ(d->meet(1, 2), 0u);
}

TEST(FrameBuild, M3IsRejected) {
  std::vector<std::pair<Element, Element>> leq{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  EXPECT_EQ(code_of([&] { build_frame(5, leq); }), ErrorCode::NotDistributive);
}

TEST(FrameBuild, NonLatticesAndCyclesAreRejected) {
  // Two maximal elements: no top.
  std::vector<std::pair<Element, Element>> v{{0, 1}, {0, 2}};
  EXPECT_EQ(code_of([&] { build_frame(3, v); }), ErrorCode::NotALattice);
  std::vector<std::pair<Element, Element>> cyc{{0, 1}, {1, 0}};
  EXPECT_EQ(code_of([&] { build_frame(2, cyc); }), ErrorCode::NotAPartialOrder);
}

TEST(FrameBuild, HeytingMatchesBruteForceResidual) {
  for (const FramePtr& fp : all_frames(7)) {
    const FiniteFrame& l = *fp;
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = 0; b < l.size(); ++b) {
        // Largest x with a ^ x <= b, by scanning.
        Element best = l.bottom();
        for (Element x = 0; x < l.size(); ++x) {
          if (l.leq(l.meet(a, x), b)) best = l.join(best, x);
        }
        ASSERT_EQ(l.heyting(a, b), best);
      }
    }
  }
}

TEST(FrameBuild, AllFramesCountsMatchKnownSequence) {
  // Distributive lattices with n elements, n = 1..8: 1 1 1 2 3 5 8 15.
  std::vector<std::size_t> per_size(9, 0);
  for (const FramePtr& f : all_frames(8)) ++per_size[f->size()];
  EXPECT_EQ(per_size, (std::vector<std::size_t>{0, 1, 1, 1, 2, 3, 5, 8, 15}));
}

TEST(FrameRelations, ChainRatherBelow) {
  FramePtr c = chain_frame(3);
  // m* = 0, so m is rather below only 1.
  EXPECT_FALSE(c->rather_below(1, 1));
  EXPECT_TRUE(c->rather_below(1, 2));
  EXPECT_TRUE(c->rather_below(0, 0));
  EXPECT_FALSE(c->completely_below(1, 1));
}

TEST(Classify, BooleanFramesSatisfyEverything) {
  for (std::size_t n = 0; n <= 3; ++n) {
    Classification c = classify(*powerset_frame(n));
    for (const auto& [name, p] : c.entries()) EXPECT_TRUE(p->holds) << name << " on 2^" << n;
  }
}

TEST(Classify, ThreeChain) {
  Classification c = classify(*chain_frame(3));
  EXPECT_FALSE(c.regular.holds);
  EXPECT_TRUE(c.extremally_disconnected.holds);
  EXPECT_FALSE(c.boolean.holds);
}

TEST(Classify, FourChainIsNotExtremallyDisconnected) {
  // In 0 < a < b < 1: a* = 0 so a* v a** = 1 holds; every nonzero element is dense.
  Classification c = classify(*chain_frame(4));
  EXPECT_TRUE(c.extremally_disconnected.holds);
  // Three points, two of them closed: opens {}, {x}, {y}, {x,y}, X with z in neither.
  std::vector<PointSet> opens{0b000, 0b001, 0b010, 0b011, 0b111};
  FiniteSpace s(3, opens);
  Classification d = classify(*open_frame(s));
  EXPECT_FALSE(d.extremally_disconnected.holds);
}

TEST(Cozero, ExamplesAndOracle) {
  FramePtr c = chain_frame(3);
  EXPECT_FALSE(is_cozero(*c, 1));
  EXPECT_TRUE(is_cozero(*c, 0));
  EXPECT_TRUE(is_cozero(*c, 2));
  FramePtr b = powerset_frame(2);
  for (Element a = 0; a < 4; ++a) EXPECT_TRUE(is_cozero(*b, a));
  Classification s = classify(*sierpinski());
  EXPECT_FALSE(s.boolean.holds);
  EXPECT_TRUE(s.p_frame.holds);
}

TEST(Booleanization, Examples) {
  Booleanization b = booleanize(chain_frame(3));
  EXPECT_EQ(b.frame->size(), 2u);
  EXPECT_EQ(b.beta(1), b.frame->top());
  EXPECT_EQ(b.embed, (std::vector<Element>{0, 2}));

  FramePtr p = powerset_frame(2);
  Booleanization bp = booleanize(p);
  EXPECT_EQ(bp.frame->size(), 4u);
  for (Element a = 0; a < 4; ++a) EXPECT_EQ(bp.embed[bp.beta(a)], a);
}

TEST(Spectrum, Examples) {
  Spectrum two = spectrum(*powerset_frame(2));
  EXPECT_EQ(two.space.point_count(), 2u);
  EXPECT_TRUE(spatial_reflection(powerset_frame(2)).is_isomorphism());

  FramePtr c = chain_frame(3);
  Spectrum s = spectrum(*c);
  EXPECT_EQ(s.primes, (std::vector<Element>{0, 1}));
  EXPECT_EQ(s.space.opens().size(), 3u);
  EXPECT_TRUE(spatial_reflection(c).is_isomorphism());
}

TEST(Spaces, OpenFrames) {
  FiniteSpace sier(2, {0b00, 0b01, 0b11});
  FramePtr f = open_frame(sier);
  EXPECT_TRUE(same_frame(*f, *chain_frame(3)));
  EXPECT_EQ(open_frame(FiniteSpace(2, {0b00, 0b01, 0b10, 0b11}))->size(), 4u);
  EXPECT_TRUE(same_frame(*open_frame(FiniteSpace(2, {0b00, 0b11})), *chain_frame(2)));
  EXPECT_EQ(code_of([] { FiniteSpace(2, {0b00, 0b01, 0b10}); }), ErrorCode::NotASpace);
}

TEST(Spaces, CountsOfTopologies) {
  // Topologies up to homeomorphism on 1..4 points: 1, 3, 9, 33.
  std::vector<std::size_t> per(5, 0);
  for (const FiniteSpace& s : all_spaces(4)) ++per[s.point_count()];
  EXPECT_EQ(per, (std::vector<std::size_t>{0, 1, 3, 9, 33}));
}

TEST(FrameHomTest, RejectsNonHomomorphism) {
  FramePtr c = chain_frame(3);
  EXPECT_EQ(code_of([&] { FrameHom(c, c, {0, 0, 0}); }), ErrorCode::NotAHomomorphism);
  FrameHom id = FrameHom::identity(c);
  EXPECT_TRUE(id.is_isomorphism());
}

TEST(Generate, DeterministicAndBounded) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    FramePtr a = generate_frame(seed, 8), b = generate_frame(seed, 8);
    EXPECT_TRUE(same_frame(*a, *b));
    EXPECT_LE(a->size(), 8u);
  }
}
