#include <gtest/gtest.h>

#include <random>
#include <set>

#include "brute.hpp"
#include "seaweed/composition.hpp"

using namespace seaweed;

namespace {

std::vector<brute::Parts> as_parts(const std::vector<Composition>& cs) {
  std::vector<brute::Parts> out;
  for (const auto& c : cs) out.emplace_back(c.begin(), c.end());
  return out;
}

}  // namespace

TEST(Composition, CachesSumAndRejectsNonPositiveParts) {
  Composition c{4, 3};
  EXPECT_EQ(c.sum(), 7);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.to_string(), "4,3");
  EXPECT_EQ(Composition{}.to_string(), "-");
  EXPECT_THROW(Composition({2, 0, 1}), SpecError);
  EXPECT_THROW(Composition({-1}), SpecError);
}

TEST(ParseSpec, TypeAWithImplicitSize) {
  const auto s = parse_spec("A:4,3|2,2,1,2");
  EXPECT_EQ(s.algebra, Algebra::A);
  EXPECT_EQ(s.n, 7);
  EXPECT_EQ(s.a, (Composition{4, 3}));
  EXPECT_EQ(s.b, (Composition{2, 2, 1, 2}));
}

TEST(ParseSpec, TypeCWithSize) {
  const auto s = parse_spec("C[n=11]:2,1,1,6|2,2,1,2");
  EXPECT_EQ(s, SeaweedSpec::type_c(11, {2, 1, 1, 6}, {2, 2, 1, 2}));
}

TEST(ParseSpec, EmptyCompositionToken) {
  const auto s = parse_spec("C[n=3]:2,1|-");
  EXPECT_EQ(s.n, 3);
  EXPECT_EQ(s.a, (Composition{2, 1}));
  EXPECT_TRUE(s.b.empty());
}

TEST(ParseSpec, ExplicitSizeForTypeA) {
  EXPECT_EQ(parse_spec("A[n=3]:1,2|3"), SeaweedSpec::type_a({1, 2}, {3}));
  EXPECT_THROW(parse_spec("A[n=4]:1,2|3"), SpecError);
}

TEST(ParseSpec, RejectsMalformedInput) {
  for (const char* bad :
       {"", "A", "A:", "A:1|", "A:|1", "A:1,2|4", "A:0,3|3", "A:1,,2|3", "B:1|1", "C:1|1",
        "C[n=2]:3|-", "C[n=2]:-|1,2", "C[n=]:1|1", "C[n=x]:1|1", "A:-1|-1",
        "C[n=3]:2,1|1|1", "A:1;1|2", "C[n=0]:1|-"}) {
    EXPECT_THROW(parse_spec(bad), SpecError) << bad;
  }
}

TEST(ParseSpec, ToleratesSpacesAroundNumbers) {
  EXPECT_EQ(parse_spec("A:4, 3|2,2,1,2 "), parse_spec("A:4,3|2,2,1,2"));
}

TEST(ParseSpec, RoundTripsRandomSpecs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const auto a = brute::random_parts(n, rng);
    const auto b = brute::random_parts(n, rng);
    const auto sa = SeaweedSpec::type_a(brute::make(a), brute::make(b));
    EXPECT_EQ(parse_spec(render_spec(sa)), sa);
    const int ma = static_cast<int>(rng() % (n + 1));
    const int mb = static_cast<int>(rng() % (n + 1));
    const auto ca = ma ? brute::make(brute::random_parts(ma, rng)) : Composition{};
    const auto cb = mb ? brute::make(brute::random_parts(mb, rng)) : Composition{};
    const auto sc = SeaweedSpec::type_c(n, ca, cb);
    EXPECT_EQ(parse_spec(render_spec(sc)), sc);
  }
}

TEST(ParseSpec, RenderOmitsTypeASize) {
  EXPECT_EQ(render_spec(SeaweedSpec::type_a({4, 3}, {2, 2, 1, 2})), "A:4,3|2,2,1,2");
  EXPECT_EQ(render_spec(SeaweedSpec::type_c(3, {}, {})), "C[n=3]:-|-");
}

TEST(CompositionsOf, SmallCasesInLexicographicOrder) {
  EXPECT_EQ(as_parts(compositions_of(1)), (std::vector<brute::Parts>{{1}}));
  EXPECT_EQ(as_parts(compositions_of(3)),
            (std::vector<brute::Parts>{{1, 1, 1}, {1, 2}, {2, 1}, {3}}));
  EXPECT_EQ(compositions_of(6).size(), 32u);
}

TEST(CompositionsOf, MatchesCutPointEnumeration) {
  for (int n = 1; n <= 12; ++n) {
    const auto got = as_parts(compositions_of(n));
    EXPECT_EQ(got.size(), std::size_t{1} << (n - 1));
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    EXPECT_EQ(std::set<brute::Parts>(got.begin(), got.end()), brute::compositions_by_cuts(n));
  }
}

TEST(CompositionsUpTo, SmallCases) {
  const auto one = as_parts(compositions_up_to(1));
  EXPECT_EQ(one, (std::vector<brute::Parts>{{}, {1}}));
  const auto two = as_parts(compositions_up_to(2));
  EXPECT_EQ(std::set<brute::Parts>(two.begin(), two.end()),
            (std::set<brute::Parts>{{}, {1}, {2}, {1, 1}}));
  EXPECT_EQ(compositions_up_to(4).size(), 16u);
}

TEST(CompositionsUpTo, CountsAndContents) {
  for (int n = 1; n <= 12; ++n) {
    const auto got = as_parts(compositions_up_to(n));
    EXPECT_EQ(got.size(), std::size_t{1} << n);
    std::set<brute::Parts> expected{{}};
    for (int m = 1; m <= n; ++m) {
      const auto level = brute::compositions_by_cuts(m);
      expected.insert(level.begin(), level.end());
    }
    EXPECT_EQ(std::set<brute::Parts>(got.begin(), got.end()), expected);
  }
}

TEST(CompositionsWithParts, FixedLength) {
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= n; ++k) {
      std::set<brute::Parts> expected;
      for (const auto& p : brute::compositions_by_cuts(n))
        if (static_cast<int>(p.size()) == k) expected.insert(p);
      const auto got = as_parts(compositions_with_parts(n, k));
      EXPECT_EQ(std::set<brute::Parts>(got.begin(), got.end()), expected);
      EXPECT_EQ(got.size(), expected.size());
    }
}

TEST(OddPartCount, Examples) {
  EXPECT_EQ(odd_part_count({4, 3}, {2, 2, 1, 2}), 2);
  EXPECT_EQ(odd_part_count({10, 5}, {5, 8}), 2);
  EXPECT_EQ(odd_part_count({}, {}), 0);
}

TEST(SeaweedSpec, ValidatesSums) {
  EXPECT_THROW(SeaweedSpec::type_a({1, 2}, {2}), SpecError);
  EXPECT_THROW(SeaweedSpec::type_c(3, {4}, {}), SpecError);
  EXPECT_NO_THROW(SeaweedSpec::type_c(3, {3}, {1}));
}
