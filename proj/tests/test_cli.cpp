#include <gtest/gtest.h>

#include "pointfree/enumerate.hpp"
#include "pointfree/io.hpp"
#include "pointfree/verify.hpp"

using namespace pointfree;

TEST(Io, FrameRoundTrip) {
  for (const FramePtr& f : all_frames(6)) {
    FramePtr g = io::frame_from_json(io::to_json(*f));
    EXPECT_TRUE(same_frame(*f, *g));
  }
  io::json counted = io::json::parse(R"({"elements": 3, "leq": [[0, 1], [1, 2]]})");
  EXPECT_TRUE(same_frame(*io::frame_from_json(counted), *chain_frame(3)));
}

TEST(Io, MalformedInputs) {
  EXPECT_THROW(io::frame_from_json(io::json::parse(R"({"leq": []})")), Error);
  EXPECT_THROW(io::frame_from_json(io::json::parse(R"({"elements": 2, "leq": [[0, 5]]})")), Error);
  EXPECT_THROW(io::frame_from_json(io::json::parse(R"({"elements": 2, "leq": [["a", 1]]})")), Error);
}

TEST(Io, FunctionRoundTrip) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) {
    FramePtr l = random_frame(rng, 8);
    RealFn f = random_partial(rng, l);
    EXPECT_EQ(io::function_from_json(io::to_json(f)), f);
  }
}

TEST(Io, SpaceAndVectorRoundTrip) {
  FiniteSpace s(3, {0b000, 0b001, 0b011, 0b111});
  EXPECT_EQ(io::space_from_json(io::to_json(s)), s);
  RieszVec v(std::vector<Rational>{Rational(1, 2), Rational(-3)});
  EXPECT_EQ(io::vec_from_json(io::to_json(v)), v);
}

TEST(Generate, PosetShapes) {
  Relation anti(2);
  anti.set(0, 0);
  anti.set(1, 1);
  EXPECT_TRUE(same_frame(*downset_frame(anti), *powerset_frame(2)));
  Relation chain = anti;
  chain.set(0, 1);
  EXPECT_TRUE(same_frame(*downset_frame(chain), *chain_frame(3)));
}

TEST(SuiteConfig, Validation) {
  verify::SuiteConfig c;
  EXPECT_NO_THROW(c.validate());
  c.breakpoint_grid = {Rational(1), Rational(0)};
  EXPECT_THROW(c.validate(), Error);
  c = verify::SuiteConfig{};
  c.samples_per_law = 0;
  EXPECT_THROW(c.validate(), Error);
  c = verify::SuiteConfig{};
  c.suites = {"nope"};
  EXPECT_THROW(c.validate(), Error);
}

TEST(Report, DeterministicAndSorted) {
  verify::SuiteConfig c;
  c.samples_per_law = 10;
  c.max_frame_size = 5;
  c.suites = {"core", "realfn"};
  verify::Report a = verify::run(c), b = verify::run(c);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_TRUE(std::is_sorted(a.checks.begin(), a.checks.end(), [](auto& x, auto& y) { return x.id < y.id; }));
  EXPECT_TRUE(a.passed()) << a.to_text();
  for (const auto& r : a.checks) {
    EXPECT_FALSE(r.anchor.empty());
    EXPECT_GT(r.instances, 0u) << r.id;
  }
}

TEST(Report, CounterexamplePresentIffFailure) {
  verify::CheckResult r = verify::check_discrete_iff_literal(verify::SuiteConfig{}, 2);
  EXPECT_GT(r.failures, 0u);
  EXPECT_FALSE(r.counterexample.is_null());
  verify::Report rep{{r}};
  EXPECT_FALSE(rep.passed());
  EXPECT_TRUE(rep.to_json()["checks"][0].contains("counterexample"));
}
