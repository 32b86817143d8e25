#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seaweed/composition.hpp"

namespace seaweed {

/// Vertices 1..n on a line. Each composition block places nested arcs pairing
/// j and k with j + k = 2*(start of block) + (block size) + 1; the first
/// composition gives top arcs, the second bottom arcs. Type C meanders also
/// carry a tail: the symmetric difference of the uncovered suffixes
/// {sum(a)+1..n} and {sum(b)+1..n}.
class Meander {
 public:
  static Meander build(const SeaweedSpec& spec);

  Algebra algebra() const { return algebra_; }
  int size() const { return static_cast<int>(top_.size()); }

  /// Partner involutions; a vertex without an arc on that side maps to itself.
  int top(int v) const { return top_[v - 1]; }
  int bottom(int v) const { return bottom_[v - 1]; }

  bool in_tail(int v) const { return in_tail_[v - 1] != 0; }
  /// Sorted tail vertices (empty for type A).
  const std::vector<int>& tail() const { return tail_; }

  /// Arcs (j, k) with j < k, sorted by j.
  std::vector<std::pair<int, int>> top_arcs() const;
  std::vector<std::pair<int, int>> bottom_arcs() const;

 private:
  Algebra algebra_ = Algebra::A;
  std::vector<int> top_;
  std::vector<int> bottom_;
  std::vector<char> in_tail_;
  std::vector<int> tail_;
};

/// One connected component of the two-coloured multigraph.
struct ComponentReport {
  std::vector<int> vertices;  // sorted
  bool is_cycle = false;
  int tail_count = 0;
  int contribution = 0;

  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

/// Disjoint cycles of j -> top(bottom(j)), each starting at its minimal
/// element, ordered by that element.
struct PermutationCycles {
  std::vector<std::vector<int>> cycles;

  /// "(1,3)(2,4)(5,7,6)"
  std::string to_string() const;
};

PermutationCycles associated_permutation(const Meander& m);

/// Components ordered by minimal vertex. A vertex whose top and bottom
/// partners coincide forms a 2-cycle (doubled edge).
std::vector<ComponentReport> components(const Meander& m);

/// Index by component counting: components + cycles - 1 for type A; for
/// type C, cycles + components holding 0 or 2 tail vertices.
int meander_index(const Meander& m);

/// Index from the associated permutation alone: cycle count - 1 for type A;
/// for type C, the number of cycles holding 0 or 2 tail integers.
int permutation_index(const Meander& m);

}  // namespace seaweed
