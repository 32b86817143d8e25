#pragma once

#include <string>
#include <vector>

#include "seaweed/composition.hpp"

namespace seaweed {

enum class ReductionRule { parabolic, empty_pair, equal_first, small_a1, large_a1, flip, strip_k };

std::string to_string(ReductionRule rule);

struct ReductionStep {
  ReductionRule rule = ReductionRule::flip;
  SeaweedSpec before;
  SeaweedSpec after;
  int increment = 0;
};

/// Steps of the inductive type-C reduction. The last step is terminal
/// (parabolic or empty_pair, with after == before) and the increments sum to
/// the index.
struct ReductionResult {
  int index = 0;
  std::vector<ReductionStep> trace;
};

/// ind p_n^C(a | -) = n - sum(a) + sum(floor(a_i / 2)). Throws SpecError if
/// sum(a) > n.
int index_parabolic_c(int n, const Composition& a);

/// Inductive index of a type-C seaweed:
///   strip_k     max(sum a, sum b) = n - k < n: add k, continue at n - k
///   flip        ensure a1 <= b1 (and move an empty string to the bottom)
///   equal_first a1 == b1: add a1, drop both first parts
///   small_a1    2*a1 <= b1: (a2..) | (b1-2a1, a1, b2..), n -= a1
///   large_a1    2*a1 >  b1: (2a1-b1, a2..) | (a1, b2..), n -= b1 - a1
///   parabolic   b empty: index_parabolic_c
/// Throws std::invalid_argument for a type-A spec.
ReductionResult index_c(const SeaweedSpec& spec);

/// index_c without the trace.
int index_c_value(const SeaweedSpec& spec);

/// "small-a1: C[n=16]:7,9|13 -> C[n=10]:1,9|7 [+0]"
std::string render_step(const ReductionStep& step);

}  // namespace seaweed
