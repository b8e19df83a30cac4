#include "kronkit/exact_linalg.hpp"

#include <stdexcept>

namespace kronkit {

std::size_t exact_rank(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(pivot, rank);
    const Integer p = m(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Integer factor = m(r, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = p * m(r, j) - factor * m(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(r, j) = std::move(v);
      }
      m(r, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

Integer bareiss_determinant(IntegerMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("bareiss_determinant: matrix is not square");
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    const Integer& p = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = p * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
    }
    prev = m(k, k);
  }
  return sign > 0 ? Integer(m(n - 1, n - 1)) : Integer(-m(n - 1, n - 1));
}

}  // namespace kronkit
