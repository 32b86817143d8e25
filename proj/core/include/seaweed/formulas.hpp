#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "seaweed/composition.hpp"

namespace seaweed {

/// An argument outside a closed formula's domain. Callers that want a
/// fallback (the CLI) switch to the meander route themselves.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// ind p^A((a,b) | (a+b)) = gcd(a,b) - 1.
int index_elashvili(int a, int b);

enum class SmallShapeA {
  three_over_one,  // (a,b,c) | (a+b+c)
  two_over_two,    // (a,b) | (c,d), a+b = c+d
};

/// gcd(a+b, b+c) - 1, where c is the third top part or the first bottom part.
int index_a_small(SmallShapeA shape, std::span<const int> parts);

/// ind p_n^C((a) | (b)). Equal parts give n; otherwise, with a > b,
/// n - a + floor((a-b)/2) for even a and n - a + floor((a-b-1)/2) for odd a.
int index_c_singletons(int n, int a, int b);

/// ind p_n^C((a,b) | (c)) = gcd(a+b, b+c) - 1 for a+b = n and c in {n-1, n-2}.
int index_c_ab_c(int n, int a, int b, int c);

/// Frobenius test for p_n^C((a,b) | (c)) with a+b = n and 1 <= c <= n.
bool is_frobenius_c_ab_c(int n, int a, int b, int c);

/// ind p_n^C((n) | (a,b)) = gcd(a+b, b+1) - 1 if a+b = n-1,
/// gcd(a+b, b+2) - 1 if a+b = n-2.
int index_c_n_ab(int n, int a, int b);

/// Frobenius test for p_n^C((n) | (a,b)) with a+b <= n.
bool is_frobenius_c_n_ab(int n, int a, int b);

/// Necessary condition for index zero. Type A: exactly two odd parts. Type C,
/// ordered so sum(b) <= sum(a): sum(a) = n, r = n - sum(b) > 0, and exactly r
/// odd parts. False means the seaweed is certainly not Frobenius.
bool necessary_frobenius(const SeaweedSpec& spec);

struct FormulaResult {
  std::optional<int> index;  // empty when only a Frobenius verdict is known
  bool frobenius = false;
  std::string rule;
};

/// Picks the closed formula covering `spec`, if any (up to swapping a and b).
std::optional<FormulaResult> formula_for(const SeaweedSpec& spec);

}  // namespace seaweed
