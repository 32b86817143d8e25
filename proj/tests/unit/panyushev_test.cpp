#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/panyushev.hpp"

using namespace seaweed;

namespace {

SeaweedSpec random_c(int n, std::mt19937_64& rng) {
  const int ma = static_cast<int>(rng() % (n + 1));
  const int mb = static_cast<int>(rng() % (n + 1));
  return SeaweedSpec::type_c(n, ma ? brute::make(brute::random_parts(ma, rng)) : Composition{},
                             mb ? brute::make(brute::random_parts(mb, rng)) : Composition{});
}

}  // namespace

TEST(IndexParabolicC, Examples) {
  EXPECT_EQ(index_parabolic_c(4, {2, 1}), 2);
  EXPECT_EQ(index_parabolic_c(3, {}), 3);
  EXPECT_EQ(index_parabolic_c(3, {1, 1, 1}), 0);
  EXPECT_THROW(index_parabolic_c(3, {2, 2}), SpecError);
}

TEST(IndexC, Examples) {
  EXPECT_EQ(index_c(parse_spec("C[n=11]:2,1,1,6|2,2,1,2")).index, 5);
  EXPECT_EQ(index_c(parse_spec("C[n=3]:2,1|1")).index, 0);
  EXPECT_EQ(index_c(parse_spec("C[n=16]:7,9|13")).index, 0);
  EXPECT_THROW(index_c(parse_spec("A:1|1")), std::invalid_argument);
}

TEST(IndexC, SixteenVertexTraceEndsAtThreeSingletonParabolic) {
  const auto r = index_c(parse_spec("C[n=16]:7,9|13"));
  ASSERT_FALSE(r.trace.empty());
  const auto& last = r.trace.back();
  EXPECT_EQ(last.rule, ReductionRule::parabolic);
  const auto terminal = last.after;
  EXPECT_EQ(terminal.n, 3);
  const bool matches = (terminal.a == Composition{1, 1, 1} && terminal.b.empty()) ||
                       (terminal.b == Composition{1, 1, 1} && terminal.a.empty());
  EXPECT_TRUE(matches) << render_spec(terminal);
}

TEST(IndexC, TraceInvariants) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto spec = random_c(1 + static_cast<int>(rng() % 60), rng);
    const auto r = index_c(spec);
    ASSERT_FALSE(r.trace.empty());
    EXPECT_EQ(r.trace.front().before, spec);
    long long total = 0;
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      EXPECT_GE(r.trace[i].increment, 0);
      total += r.trace[i].increment;
      if (i + 1 < r.trace.size()) EXPECT_EQ(r.trace[i].after, r.trace[i + 1].before);
    }
    const auto rule = r.trace.back().rule;
    EXPECT_TRUE(rule == ReductionRule::parabolic || rule == ReductionRule::empty_pair);
    EXPECT_EQ(total, r.index);
    EXPECT_EQ(index_c_value(spec), r.index);
  }
}

TEST(IndexC, MatchesMeanderExhaustive) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_up_to(n))
      for (const auto& b : compositions_up_to(n)) {
        const auto spec = SeaweedSpec::type_c(n, a, b);
        ASSERT_EQ(index_c_value(spec), brute::index_by_components(spec)) << render_spec(spec);
      }
}

TEST(IndexC, MatchesMeanderOnRandomLargeSpecs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto spec = random_c(1 + static_cast<int>(rng() % 200), rng);
    ASSERT_EQ(index_c_value(spec), meander_index(Meander::build(spec))) << render_spec(spec);
  }
}

TEST(IndexC, StripKIdentity) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 3000; ++trial) {
    const int inner = 1 + static_cast<int>(rng() % 40);
    const int extra = 1 + static_cast<int>(rng() % 10);
    const auto a = brute::make(brute::random_parts(inner, rng));
    const int mb = static_cast<int>(rng() % (inner + 1));
    const auto b = mb ? brute::make(brute::random_parts(mb, rng)) : Composition{};
    const int small = index_c_value(SeaweedSpec::type_c(inner, a, b));
    EXPECT_EQ(index_c_value(SeaweedSpec::type_c(inner + extra, a, b)), small + extra);
  }
}

TEST(IndexC, FlipSymmetry) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto spec = random_c(1 + static_cast<int>(rng() % 80), rng);
    EXPECT_EQ(index_c_value(spec), index_c_value(SeaweedSpec::type_c(spec.n, spec.b, spec.a)));
  }
}

TEST(IndexC, HandlesVeryLargeSpecsIteratively) {
  std::mt19937_64 rng(77);
  const int n = 100000;
  const auto spec = SeaweedSpec::type_c(n, brute::make(brute::random_parts(n, rng)),
                                        brute::make(brute::random_parts(n - 3, rng)));
  EXPECT_EQ(index_c_value(spec), meander_index(Meander::build(spec)));
}

TEST(RenderStep, ReductionFormat) {
  const auto r = index_c(parse_spec("C[n=3]:1,1,1|-"));
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(render_step(r.trace[0]), "parabolic: C[n=3]:1,1,1|- -> C[n=3]:1,1,1|- [+0]");
  EXPECT_EQ(to_string(ReductionRule::strip_k), "strip-k");
  EXPECT_EQ(to_string(ReductionRule::empty_pair), "empty-pair");
}
