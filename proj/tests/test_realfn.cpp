#include <gtest/gtest.h>

#include <random>

#include "pointfree/enumerate.hpp"
#include "pointfree/real_fn.hpp"

using namespace pointfree;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

// Constant r evaluated directly: up(p) = 1 iff p < r, down(q) = 1 iff q > r.
void expect_constant(const RealFn& f, const Rational& r) {
  const FiniteFrame& l = *f.frame();
  for (long k = -12; k <= 12; ++k) {
    Rational p = make_rational(k, 4);
    EXPECT_EQ(f.up_at(p), p < r ? l.top() : l.bottom()) << p;
    EXPECT_EQ(f.down_at(p), p > r ? l.top() : l.bottom()) << p;
  }
}

}  // namespace

TEST(StepMaps, CanonicalAndContinuity) {
  StepMap a(Orientation::Antitone, {q(0), q(1), q(2)}, {2, 1, 1, 0});
  EXPECT_EQ(a.breakpoints(), (std::vector<Rational>{q(0), q(2)}));
  // Right-continuous: the value at a breakpoint is the one to its right.
  EXPECT_EQ(a(q(0)), 1u);
  EXPECT_EQ(a(q(-1, 2)), 2u);
  StepMap i(Orientation::Isotone, {q(0)}, {0, 2});
  // Left-continuous.
  EXPECT_EQ(i(q(0)), 0u);
  EXPECT_EQ(i(q(1, 100)), 2u);
}

TEST(Constants, ExampleFromScale) {
  FramePtr c = chain_frame(3);
  RealFn zero = constant(c, q(0));
  expect_constant(zero, q(0));
  EXPECT_TRUE(zero.is_continuous());
  Scale s{c, StepMap(Orientation::Antitone, {q(3, 2)}, {c->top(), c->bottom()}), {}};
  expect_constant(from_scale(s), q(3, 2));
}

TEST(Scales, DegeneratePointValueWashesOut) {
  FramePtr c = chain_frame(3);
  Scale s{c, StepMap(Orientation::Antitone, {q(0)}, {2, 0}), {{q(0), 1}}};
  EXPECT_TRUE(s.is_scale());
  EXPECT_EQ(from_scale(s), constant(c, q(0)));
}

TEST(Scales, NonComplementedIntervalValueIsRejected) {
  FramePtr c = chain_frame(3);
  Scale s{c, StepMap(Orientation::Antitone, {q(0), q(1)}, {2, 1, 0}), {}};
  EXPECT_FALSE(s.is_extended_scale());
  EXPECT_EQ(code_of([&] { from_scale(s); }), ErrorCode::NotAnExtendedScale);
}

TEST(Characteristic, ClassesAndErrors) {
  FramePtr b = powerset_frame(2);
  RealFn chi = characteristic(b, 1, 2);
  EXPECT_TRUE(chi.is_continuous());
  EXPECT_EQ(chi.up_at(q(1, 2)), 1u);
  EXPECT_EQ(chi.down_at(q(1, 2)), 2u);
  EXPECT_EQ(coz(chi), 1u);
  EXPECT_EQ(code_of([&] { characteristic(b, 1, 3); }), ErrorCode::MeetNotZero);
  FramePtr c = chain_frame(3);
  EXPECT_EQ(code_of([&] { characteristic(c, 1); }), ErrorCode::PreconditionFailed);
  // chi_{m, 0} on the 3-chain violates r2 between 0 and 1, so it is partial.
  EXPECT_EQ(characteristic(c, 1, 0).fn_class(), FnClass::Partial);
}

TEST(Construction, RelationChecks) {
  FramePtr c = chain_frame(3);
  EXPECT_EQ(code_of([&] { RealFn(c, StepMap(Orientation::Antitone, {q(0)}, {0, 2}), StepMap::constant(Orientation::Isotone, 0)); }),
            ErrorCode::NotMonotone);
  EXPECT_EQ(code_of([&] {
              RealFn(c, StepMap::constant(Orientation::Antitone, 1), StepMap::constant(Orientation::Isotone, 1));
            }),
            ErrorCode::RelationViolated);
}

TEST(Order, Examples) {
  FramePtr c = chain_frame(3);
  EXPECT_TRUE(leq(constant(c, q(1)), constant(c, q(2))));
  EXPECT_FALSE(leq(constant(c, q(2)), constant(c, q(1))));
  RealFn f = characteristic(powerset_frame(2), 1);
  EXPECT_TRUE(leq(f, f));
}

TEST(Operations, PointwiseOracleOnPowersets) {
  // On 2^n a continuous function is a real vector indexed by atoms: its value at
  // atom i is sup{p : i in f(p,-)}. Operations must act coordinatewise.
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 3; ++n) {
    FramePtr l = powerset_frame(n);
    auto coords = [&](const RealFn& f) {
      std::vector<Rational> v;
      for (std::size_t i = 0; i < n; ++i) {
        auto [lo, hi] = interval_at(f, [i](Element e) { return (e >> i & 1) != 0; });
        EXPECT_EQ(lo, hi);
        v.push_back(lo.value());
      }
      return v;
    };
    for (int k = 0; k < 40; ++k) {
      RealFn f = random_continuous(rng, l), g = random_continuous(rng, l);
      auto fv = coords(f), gv = coords(g);
      auto sum = coords(add(f, g)), mx = coords(join_op(f, g)), mn = coords(meet_op(f, g)), neg = coords(negate(f));
      auto tri = coords(scalar(q(3), f)), pos = coords(positive_part(f));
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(sum[i], fv[i] + gv[i]);
        EXPECT_EQ(mx[i], std::max(fv[i], gv[i]));
        EXPECT_EQ(mn[i], std::min(fv[i], gv[i]));
        EXPECT_EQ(neg[i], -fv[i]);
        EXPECT_EQ(tri[i], 3 * fv[i]);
        EXPECT_EQ(pos[i], std::max(fv[i], Rational(0)));
      }
      EXPECT_EQ(leq(f, g), std::equal(fv.begin(), fv.end(), gv.begin(), [](auto& a, auto& b) { return a <= b; }));
    }
  }
}

TEST(Operations, ScalarZeroAndNegative) {
  FramePtr l = powerset_frame(2);
  RealFn f = characteristic(l, 1);
  EXPECT_EQ(scalar(q(0), f), constant(l, q(0)));
  EXPECT_EQ(scalar(q(-2), f), negate(scalar(q(2), f)));
  EXPECT_EQ(subtract(f, f), constant(l, q(0)));
}

TEST(DiscreteSup, Examples) {
  FramePtr l = powerset_frame(2);
  RealFn a = characteristic(l, 1), b = scalar(q(2), characteristic(l, 2));
  std::vector<RealFn> fam{a, b};
  RealFn s = discrete_sup(fam);
  EXPECT_EQ(s, join_op(a, b));
  std::vector<RealFn> one{a};
  EXPECT_EQ(discrete_sup(one), a);
  EXPECT_EQ(code_of([] { discrete_sup(std::span<const RealFn>{}); }), ErrorCode::EmptyFamily);
  std::vector<RealFn> neg{negate(a)};
  EXPECT_EQ(code_of([&] { discrete_sup(neg); }), ErrorCode::NotNonnegative);
}

TEST(Upsilon, IdentityHomAndReconstruction) {
  FramePtr c = chain_frame(3);
  RealFn f = constant(c, q(2));
  EXPECT_EQ(compose_hom(FrameHom::identity(c), f), f);
  Booleanization b = booleanize(c);
  EXPECT_EQ(lift_from_booleanization(b, upsilon(b, f)), f);
  EXPECT_TRUE(reconstruct_double_neg(f).ok);
}

TEST(Density, WitnessExamples) {
  FramePtr two = powerset_frame(1);
  Booleanization b = booleanize(two);
  // h = 2 has h(1,-) = 1, so a = 1 is admissible at q = 1 and the witness is chi_1 = 1.
  RealFn h = constant(b.frame, q(2));
  std::vector<Element> chain = interpolation_chain(*two, 1, 1);
  DensityWitness w = density_witness(b, h, q(1), 1, chain);
  EXPECT_TRUE(w.sigma.is_scale());
  EXPECT_EQ(w.f, characteristic(two, 1));
  EXPECT_EQ(w.f, constant(two, q(1)));
  DensityWitness z = density_witness(b, h, q(0), 1, chain);
  EXPECT_TRUE(leq(z.f, constant(two, q(0))));
}

TEST(InterpolationChain, StaysInsideCompletelyBelow) {
  for (const FramePtr& fp : all_frames(7)) {
    const FiniteFrame& l = *fp;
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = 0; b < l.size(); ++b) {
        if (!l.completely_below(b, a)) {
          EXPECT_EQ(code_of([&] { interpolation_chain(l, b, a); }), ErrorCode::PreconditionFailed);
          continue;
        }
        std::vector<Element> ch = interpolation_chain(l, b, a);
        ASSERT_GE(ch.size(), 2u);
        EXPECT_EQ(ch.front(), b);
        EXPECT_EQ(ch.back(), a);
        for (std::size_t i = 1; i < ch.size(); ++i) EXPECT_TRUE(l.completely_below(ch[i - 1], ch[i]));
      }
    }
  }
}

TEST(RieszIsoTransfer, Examples) {
  FramePtr l = powerset_frame(2);
  FrameHom id = FrameHom::identity(l);
  EXPECT_EQ(boolean_iso_from_riesz_iso([](const RealFn& f) { return f; }, l, l).map(), id.map());
  FramePtr l3 = powerset_frame(3);
  // Swap atoms 0 and 1.
  std::vector<Element> m(8);
  for (Element a = 0; a < 8; ++a) m[a] = (a & 4) | ((a & 1) << 1) | ((a & 2) >> 1);
  FrameHom psi(l3, l3, m);
  auto phi = [&](const RealFn& f) { return add(compose_hom(psi, f), constant(l3, q(1))); };
  EXPECT_EQ(boolean_iso_from_riesz_iso(phi, l3, l3).map(), m);
}
