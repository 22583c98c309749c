#pragma once

#include <cstddef>
#include <vector>

#include "sculpt/exact_scalar.hpp"

namespace sculpt {

/// Dense matrix of exact scalars, row-major.
class ScalarMatrix {
 public:
  ScalarMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ExactScalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactScalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Same shape with every nonzero entry replaced by 1.
  ScalarMatrix support() const;

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<ExactScalar> data_;
};

/// Matrix permanent by Ryser's inclusion-exclusion formula with Gray-code
/// column updates, exact over Q(sqrt2, i). For a 0/1 support matrix this is
/// the directed perfect-matching count of the corresponding digraph.
/// Throws std::invalid_argument on non-square input.
ExactScalar permanent(const ScalarMatrix& m);

}  // namespace sculpt
