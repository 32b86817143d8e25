#include "seaweed/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace seaweed {

namespace {

std::vector<int> block_ids(const std::vector<int>& blocks, int dim) {
  std::vector<int> id(dim);
  int pos = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int k = 0; k < blocks[b]; ++k) id[pos++] = static_cast<int>(b);
  }
  return id;
}

std::vector<int> palindromic_extension(const Composition& c, int n) {
  std::vector<int> out(c.begin(), c.end());
  const auto middle = 2LL * n - 2 * c.sum();
  if (middle > 0) out.push_back(static_cast<int>(middle));
  out.insert(out.end(), c.parts().rbegin(), c.parts().rend());
  return out;
}

struct Slot {
  int element = -1;
  int value = 0;  // entry of that basis element at this position
};

struct Term {
  int row;
  int col;
  std::int64_t value;
};

void add_term(std::vector<Term>& terms, int row, int col, std::int64_t value) {
  for (auto& t : terms) {
    if (t.row == row && t.col == col) {
      t.value += value;
      return;
    }
  }
  terms.push_back(Term{row, col, value});
}

std::int64_t value_at(const std::vector<Term>& terms, int row, int col) {
  for (const auto& t : terms) {
    if (t.row == row && t.col == col) return t.value;
  }
  return 0;
}

}  // namespace

MatrixShape::MatrixShape(int dim, std::vector<int> lower_blocks, std::vector<int> upper_blocks)
    : dim_(dim),
      lower_(std::move(lower_blocks)),
      upper_(std::move(upper_blocks)),
      cells_(static_cast<std::size_t>(dim) * dim, 0) {
  const auto lower_id = block_ids(lower_, dim);
  const auto upper_id = block_ids(upper_, dim);
  for (int i = 1; i <= dim; ++i) {
    for (int j = 1; j <= dim; ++j) {
      const bool lower = i >= j && lower_id[i - 1] == lower_id[j - 1];
      const bool upper = i <= j && upper_id[i - 1] == upper_id[j - 1];
      if (lower || upper) {
        cells_[(i - 1) * dim + (j - 1)] = 1;
        ++count_;
      }
    }
  }
}

bool MatrixShape::anti_transpose_symmetric() const {
  for (int i = 1; i <= dim_; ++i) {
    for (int j = 1; j <= dim_; ++j) {
      if (admissible(i, j) != admissible(dim_ + 1 - j, dim_ + 1 - i)) return false;
    }
  }
  return true;
}

MatrixShape shape_of(const SeaweedSpec& spec) {
  if (spec.algebra == Algebra::A) {
    return MatrixShape(spec.n, std::vector<int>(spec.a.begin(), spec.a.end()),
                       std::vector<int>(spec.b.begin(), spec.b.end()));
  }
  return MatrixShape(2 * spec.n, palindromic_extension(spec.a, spec.n),
                     palindromic_extension(spec.b, spec.n));
}

std::vector<BasisElement> basis_of(const SeaweedSpec& spec, const MatrixShape& shape) {
  const int d = shape.dim();
  std::vector<BasisElement> basis;
  if (spec.algebra == Algebra::A) {
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) {
        if (shape.admissible(i, j)) basis.push_back({{{i, j, 1}}, BasisKind::gl_unit});
      }
    }
    return basis;
  }

  const int n = spec.n;
  std::vector<char> done(static_cast<std::size_t>(d) * d, 0);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (!shape.admissible(i, j) || done[(i - 1) * d + (j - 1)]) continue;
      const int si = d + 1 - j;
      const int sj = d + 1 - i;
      if (!shape.admissible(si, sj)) {
        throw std::logic_error("anti-transpose orbit leaves the shape at (" + std::to_string(i) +
                               "," + std::to_string(j) + ")");
      }
      done[(i - 1) * d + (j - 1)] = 1;
      done[(si - 1) * d + (sj - 1)] = 1;
      const bool diagonal_block = (i <= n) == (j <= n);
      if (si == i && sj == j) {
        basis.push_back({{{i, j, 1}}, BasisKind::sp_fixed});
      } else if (diagonal_block) {
        basis.push_back({{{i, j, 1}, {si, sj, -1}}, BasisKind::sp_pair_diag});
      } else {
        basis.push_back({{{i, j, 1}, {si, sj, 1}}, BasisKind::sp_pair_anti});
      }
    }
  }
  return basis;
}

Functional Functional::random(std::size_t dim, std::uint64_t seed, std::int64_t range) {
  Functional f;
  f.seed = seed;
  f.coefficients.resize(dim);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-range, range);
  for (auto& c : f.coefficients) c = dist(rng);
  return f;
}

IntMatrix kirillov_matrix(const MatrixShape& shape, std::span<const BasisElement> basis,
                          const Functional& f) {
  const int d = shape.dim();
  const std::size_t dim = basis.size();
  if (f.coefficients.size() != dim) {
    throw std::invalid_argument("functional length does not match the basis");
  }
  std::vector<Slot> slots(static_cast<std::size_t>(d) * d);
  for (std::size_t k = 0; k < dim; ++k) {
    for (const auto& e : basis[k].entries) {
      slots[(e.row - 1) * d + (e.col - 1)] = Slot{static_cast<int>(k), e.value};
    }
  }

  IntMatrix m(dim, dim);
  std::vector<Term> terms;
  std::vector<std::pair<int, std::int64_t>> coords;
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      if (x == y) continue;
      terms.clear();
      // [X, Y] = XY - YX on sparse entries: E_ij E_kl = [j == k] E_il.
      for (const auto& p : basis[x].entries) {
        for (const auto& q : basis[y].entries) {
          const std::int64_t uv = std::int64_t{p.value} * q.value;
          if (p.col == q.row) add_term(terms, p.row, q.col, uv);
          if (q.col == p.row) add_term(terms, q.row, p.col, -uv);
        }
      }

      coords.clear();
      for (const auto& t : terms) {
        if (t.value == 0) continue;
        const Slot& s = slots[(t.row - 1) * d + (t.col - 1)];
        if (s.element < 0) {
          throw BracketClosureError("bracket leaves the seaweed at (" + std::to_string(t.row) +
                                    "," + std::to_string(t.col) + ")");
        }
        const std::int64_t c = t.value * s.value;
        auto it = std::find_if(coords.begin(), coords.end(),
                               [&](const auto& kc) { return kc.first == s.element; });
        if (it == coords.end()) {
          coords.emplace_back(s.element, c);
        } else if (it->second != c) {
          throw BracketClosureError("bracket is not symmetric across an orbit");
        }
      }

      std::int64_t value = 0;
      for (const auto& [k, c] : coords) {
        // Every entry of the element must match, including ones the bracket missed.
        for (const auto& e : basis[k].entries) {
          if (value_at(terms, e.row, e.col) != c * e.value) {
            throw BracketClosureError("bracket is not symmetric across an orbit");
          }
        }
        value += f.coefficients[k] * c;
      }
      m(x, y) = value;
    }
  }
  return m;
}

std::uint64_t seed_for_trial(std::uint64_t seed, int trial) {
  // splitmix64 finalizer over (seed, trial)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

OracleResult index_oracle(const SeaweedSpec& spec, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("oracle needs at least one trial");
  const auto shape = shape_of(spec);
  const auto basis = basis_of(spec, shape);
  OracleResult out;
  out.dim = static_cast<int>(basis.size());
  out.trials = trials;
  out.seed = seed;
  std::size_t best = 0;
  for (int t = 0; t < trials; ++t) {
    const auto f = Functional::random(basis.size(), seed_for_trial(seed, t));
    const auto m = kirillov_matrix(shape, basis, f);
    if (!m.is_antisymmetric()) throw std::logic_error("Kirillov matrix is not antisymmetric");
    const std::size_t rank = exact_rank(m);
    if (rank % 2 != 0) throw std::logic_error("antisymmetric matrix with odd rank");
    out.ranks.push_back(static_cast<int>(rank));
    best = std::max(best, rank);
  }
  out.index = out.dim - static_cast<int>(best) - (spec.algebra == Algebra::A ? 1 : 0);
  return out;
}

}  // namespace seaweed
