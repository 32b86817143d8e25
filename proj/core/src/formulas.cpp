#include "seaweed/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "seaweed/panyushev.hpp"

namespace seaweed {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

FormulaResult value(int index, std::string rule) {
  return FormulaResult{index, index == 0, std::move(rule)};
}

std::optional<FormulaResult> formula_a(const Composition& a, const Composition& b) {
  if (a.size() == 2 && b.size() == 1) {
    return value(index_elashvili(a[0], a[1]), "elashvili");
  }
  if (a.size() == 3 && b.size() == 1) {
    const int parts[] = {a[0], a[1], a[2]};
    return value(index_a_small(SmallShapeA::three_over_one, parts), "a-three-over-one");
  }
  if (a.size() == 2 && b.size() == 2) {
    const int parts[] = {a[0], a[1], b[0], b[1]};
    return value(index_a_small(SmallShapeA::two_over_two, parts), "a-two-over-two");
  }
  return std::nullopt;
}

std::optional<FormulaResult> formula_c(int n, const Composition& a, const Composition& b) {
  if (b.empty()) return value(index_parabolic_c(n, a), "c-parabolic");
  if (a.size() == 1 && b.size() == 1) {
    return value(index_c_singletons(n, a[0], b[0]), "c-singletons");
  }
  if (a.size() == 2 && b.size() == 1 && a.sum() == n) {
    const int c = b[0];
    if (c == n - 1 || c == n - 2) return value(index_c_ab_c(n, a[0], a[1], c), "c-ab-c");
    const bool frob = is_frobenius_c_ab_c(n, a[0], a[1], c);
    return FormulaResult{frob ? std::optional<int>(0) : std::nullopt, frob, "c-ab-c-frobenius"};
  }
  if (a.size() == 1 && a[0] == n && b.size() == 2 && b.sum() < n) {
    const auto s = b.sum();
    if (s == n - 1 || s == n - 2) return value(index_c_n_ab(n, b[0], b[1]), "c-n-ab");
    const bool frob = is_frobenius_c_n_ab(n, b[0], b[1]);
    return FormulaResult{frob ? std::optional<int>(0) : std::nullopt, frob, "c-n-ab-frobenius"};
  }
  return std::nullopt;
}

}  // namespace

int index_elashvili(int a, int b) {
  require(a >= 1 && b >= 1, "elashvili formula needs positive parts");
  return std::gcd(a, b) - 1;
}

int index_a_small(SmallShapeA shape, std::span<const int> parts) {
  for (int p : parts) require(p >= 1, "parts must be positive");
  if (shape == SmallShapeA::three_over_one) {
    require(parts.size() == 3, "(a,b,c)|(n) takes three parts");
  } else {
    require(parts.size() == 4, "(a,b)|(c,d) takes four parts");
    require(parts[0] + parts[1] == parts[2] + parts[3], "(a,b)|(c,d) needs a+b = c+d");
  }
  const int a = parts[0];
  const int b = parts[1];
  const int c = parts[2];
  return std::gcd(a + b, b + c) - 1;
}

int index_c_singletons(int n, int a, int b) {
  require(a >= 1 && b >= 1 && a <= n && b <= n, "singleton formula needs 1 <= a,b <= n");
  if (a == b) return n;
  if (a < b) std::swap(a, b);
  const int bracket = a % 2 == 0 ? (a - b) / 2 : (a - b - 1) / 2;
  return n - a + bracket;
}

int index_c_ab_c(int n, int a, int b, int c) {
  require(a >= 1 && b >= 1 && a + b == n, "(a,b)|(c) formula needs a+b = n");
  require(c >= 1 && (c == n - 1 || c == n - 2), "(a,b)|(c) formula needs c = n-1 or n-2");
  return std::gcd(a + b, b + c) - 1;
}

bool is_frobenius_c_ab_c(int n, int a, int b, int c) {
  require(a >= 1 && b >= 1 && a + b == n, "(a,b)|(c) test needs a+b = n");
  require(c >= 1 && c <= n, "(a,b)|(c) test needs 1 <= c <= n");
  const int g = std::gcd(a + b, b + c);
  if (c == n - 1 || c == n - 2) return g == 1;
  if (c == n - 3) return a % 2 == 1 && b % 2 == 1 && c % 2 == 1 && g == 2;
  // c <= n-4 leaves too few odd parts; c = n leaves no tail.
  return false;
}

int index_c_n_ab(int n, int a, int b) {
  require(a >= 1 && b >= 1, "(n)|(a,b) formula needs positive parts");
  if (a + b == n - 1) return std::gcd(a + b, b + 1) - 1;
  if (a + b == n - 2) return std::gcd(a + b, b + 2) - 1;
  throw DomainError("(n)|(a,b) formula needs a+b = n-1 or n-2");
}

bool is_frobenius_c_n_ab(int n, int a, int b) {
  require(a >= 1 && b >= 1 && a + b <= n, "(n)|(a,b) test needs a,b >= 1 and a+b <= n");
  const int s = a + b;
  if (s == n - 1) return std::gcd(s, b + 1) == 1;
  if (s == n - 2) return std::gcd(s, b + 2) == 1;
  if (s == n - 3) {
    return n % 2 == 1 && a % 2 == 1 && b % 2 == 1 && std::gcd(s, b + 3) == 2;
  }
  return false;
}

bool necessary_frobenius(const SeaweedSpec& spec) {
  const int odd = odd_part_count(spec.a, spec.b);
  if (spec.algebra == Algebra::A) return odd == 2;
  const long long big = std::max(spec.a.sum(), spec.b.sum());
  const long long small = std::min(spec.a.sum(), spec.b.sum());
  const long long r = spec.n - small;
  return big == spec.n && r > 0 && odd == r;
}

std::optional<FormulaResult> formula_for(const SeaweedSpec& spec) {
  if (spec.algebra == Algebra::A) {
    if (auto r = formula_a(spec.a, spec.b)) return r;
    return formula_a(spec.b, spec.a);
  }
  if (auto r = formula_c(spec.n, spec.a, spec.b)) return r;
  return formula_c(spec.n, spec.b, spec.a);
}

}  // namespace seaweed
