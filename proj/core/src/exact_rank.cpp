#include "seaweed/exact_rank.hpp"

#include <gmpxx.h>

#include <utility>

namespace seaweed {

bool IntMatrix::is_antisymmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
  }
  return true;
}

std::size_t exact_rank(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t v = m(i, j);
      if (v != 0) a[i][j] = static_cast<long>(v);
    }
  }

  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);

    const mpz_class& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      auto& row = a[i];
      const auto& prow = a[rank];
      const mpz_class factor = row[col];
      // row[j] = (p * row[j] - factor * prow[j]) / previous, exactly.
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), p.get_mpz_t());
        if (sgn(factor) != 0 && sgn(prow[j]) != 0) {
          mpz_submul(row[j].get_mpz_t(), factor.get_mpz_t(), prow[j].get_mpz_t());
        }
        if (previous != 1) {
          mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), previous.get_mpz_t());
        }
      }
      row[col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

}  // namespace seaweed
