#include "sculpt/matrix.hpp"

#include <cstdint>
#include <stdexcept>

namespace sculpt {

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ExactScalar::one();
  return m;
}

ScalarMatrix ScalarMatrix::support() const {
  ScalarMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!data_[i].is_zero()) m.data_[i] = ExactScalar::one();
  }
  return m;
}

ExactScalar permanent(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("permanent of non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return ExactScalar::one();
  if (n > 62) {
    throw std::invalid_argument("permanent: matrix too large for subset enumeration");
  }

  // Perm(A) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} a_ij.
  // Subsets walk in Gray-code order so each step adds or removes one column
  // from the running row sums.
  std::vector<ExactScalar> row_sum(n);
  ExactScalar total;
  std::uint64_t prev_gray = 0;
  int popcount = 0;

  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    std::uint64_t gray = k ^ (k >> 1);
    std::uint64_t changed = gray ^ prev_gray;
    std::size_t col = static_cast<std::size_t>(__builtin_ctzll(changed));
    bool added = (gray & changed) != 0;
    popcount += added ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        row_sum[i] += m.at(i, col);
      } else {
        row_sum[i] -= m.at(i, col);
      }
    }
    ExactScalar prod = ExactScalar::one();
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod *= row_sum[i];
    if (prod.is_zero()) {
      prev_gray = gray;
      continue;
    }
    if (popcount % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
    prev_gray = gray;
  }
  if (n % 2 != 0) total = -total;
  return total;
}

}  // namespace sculpt
