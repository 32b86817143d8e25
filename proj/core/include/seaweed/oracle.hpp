#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "seaweed/composition.hpp"
#include "seaweed/exact_rank.hpp"

namespace seaweed {

/// Admissible entry positions of the seaweed's matrices (1-based). Position
/// (i,j) is admissible iff i >= j inside one lower block, or i <= j inside one
/// upper block. Type C uses d = 2n and the palindromic extensions
/// (a_1..a_m, 2n - 2 sum(a), a_m..a_1), with a zero middle part dropped.
class MatrixShape {
 public:
  MatrixShape(int dim, std::vector<int> lower_blocks, std::vector<int> upper_blocks);

  int dim() const { return dim_; }
  bool admissible(int i, int j) const { return cells_[(i - 1) * dim_ + (j - 1)] != 0; }
  std::size_t count() const { return count_; }

  const std::vector<int>& lower_blocks() const { return lower_; }
  const std::vector<int>& upper_blocks() const { return upper_; }

  /// True iff the shape is invariant under (i,j) -> (d+1-j, d+1-i).
  bool anti_transpose_symmetric() const;

 private:
  int dim_;
  std::vector<int> lower_;
  std::vector<int> upper_;
  std::vector<char> cells_;
  std::size_t count_ = 0;
};

enum class BasisKind { gl_unit, sp_pair_diag, sp_pair_anti, sp_fixed };

struct MatrixEntry {
  int row;
  int col;
  int value;
};

/// Sparse basis matrix with at most two nonzero entries. The first entry
/// always carries +1.
struct BasisElement {
  std::vector<MatrixEntry> entries;
  BasisKind kind = BasisKind::gl_unit;
};

/// Bracket of two basis elements that does not expand in the basis.
class BracketClosureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

MatrixShape shape_of(const SeaweedSpec& spec);

/// Type A: one unit matrix per admissible position (a gl(n) basis). Type C:
/// one element per anti-transpose orbit: E_p - E_s(p) in the diagonal blocks,
/// E_p + E_s(p) off the diagonal blocks, E_p on the antidiagonal of an
/// off-diagonal block. Throws std::logic_error if an orbit leaves the shape.
std::vector<BasisElement> basis_of(const SeaweedSpec& spec, const MatrixShape& shape);

/// Integer linear functional given by its value on each basis element.
struct Functional {
  std::vector<std::int64_t> coefficients;
  std::uint64_t seed = 0;

  static constexpr std::int64_t default_range = std::int64_t{1} << 20;

  /// Coefficients uniform in [-range, range], reproducible from seed.
  static Functional random(std::size_t dim, std::uint64_t seed,
                           std::int64_t range = default_range);
};

/// M[i][j] = f([x_i, x_j]) with brackets expanded in the basis. Throws
/// BracketClosureError when a commutator leaves the span.
IntMatrix kirillov_matrix(const MatrixShape& shape, std::span<const BasisElement> basis,
                          const Functional& f);

struct OracleResult {
  int dim = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<int> ranks;
  int index = 0;
};

/// dim - max rank(B_f) over `trials` random functionals, minus one for type A
/// (the basis spans the gl(n) seaweed). The result never undercounts; a
/// single trial overcounts with probability at most (dim/2) / (2R+1), the
/// degree bound for a nonzero Pfaffian minor.
/// Trial t draws its functional from seed_for_trial(seed, t).
OracleResult index_oracle(const SeaweedSpec& spec, int trials, std::uint64_t seed);

std::uint64_t seed_for_trial(std::uint64_t seed, int trial);

}  // namespace seaweed
