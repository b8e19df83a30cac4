#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kronkit/rational.hpp"

namespace kronkit {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;

/// Rank over Q by fraction-free (Bareiss) elimination. Exact.
std::size_t exact_rank(IntegerMatrix m);

/// Determinant by Bareiss elimination with exact division. The 0x0
/// determinant is 1.
Integer bareiss_determinant(IntegerMatrix m);

}  // namespace kronkit
