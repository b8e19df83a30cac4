#pragma once

// Hand-rolled generators and slow reference implementations shared by the
// unit tests. The references deliberately avoid the library's algorithms.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "kronkit/error.hpp"
#include "kronkit/instance.hpp"
#include "kronkit/rational.hpp"
#include "kronkit/weights.hpp"

namespace kt {

using namespace kronkit;

// Code of the kronkit::Error thrown by f, or a test failure.
template <typename F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no kronkit::Error thrown";
  return Errc::ParseError;
}

inline HyperplaneCandidate hyperplane(std::vector<long> a, std::vector<long> b, std::vector<long> c, long z) {
  HyperplaneCandidate hz;
  for (long v : a) hz.H[0].emplace_back(v);
  for (long v : b) hz.H[1].emplace_back(v);
  for (long v : c) hz.H[2].emplace_back(v);
  hz.z = z;
  return hz;
}

// The (H, z) used throughout: r_A1 + r_B1 - r_C1 <= 1 in disguise.
inline HyperplaneCandidate standard_hz() { return hyperplane({-1, 1}, {-1, 1}, {1, -1}, -1); }

inline KronInstance instance(std::initializer_list<int> a, std::initializer_list<int> b, std::initializer_list<int> c,
                             int k, std::optional<int> m = std::nullopt) {
  return make_instance(parse_young(a), parse_young(b), parse_young(c), k, m);
}

inline std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// Generators

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(std::mt19937_64& rng, long num_range = 1000, long den_range = 1000) {
  const long num = uniform(rng, -num_range, num_range);
  const long den = uniform(rng, 1, den_range);
  return Rational(Integer(num), Integer(den));
}

// Rationals with numerators and denominators far beyond 64 bits.
inline Rational random_big_rational(std::mt19937_64& rng) {
  Integer num = 0;
  Integer den = 0;
  const int limbs = static_cast<int>(uniform(rng, 1, 4));
  for (int i = 0; i < limbs; ++i) {
    num = num * Integer("18446744073709551616") + Integer(std::to_string(rng()));
    den = den * Integer("18446744073709551616") + Integer(std::to_string(rng()));
  }
  if (den == 0) den = 1;
  if (rng() & 1U) num = -num;
  return Rational(num, den);
}

inline GaussianRational random_gaussian(std::mt19937_64& rng, long range = 20) {
  return {random_rational(rng, range, range), random_rational(rng, range, range)};
}

inline YoungDiagram random_diagram(std::mt19937_64& rng, int k, int max_height) {
  for (;;) {
    std::vector<int> rows;
    int left = k;
    while (left > 0 && static_cast<int>(rows.size()) < max_height) {
      const int cap = rows.empty() ? left : std::min(left, rows.back());
      const int r = static_cast<int>(uniform(rng, 1, cap));
      rows.push_back(r);
      left -= r;
    }
    if (left == 0) return parse_young(std::span<const int>(rows));
  }
}

// Traceless H with entries in [-range, range].
inline HyperplaneCandidate random_hyperplane(std::mt19937_64& rng, int m, long range = 3) {
  HyperplaneCandidate hz;
  for (auto& comp : hz.H) {
    long sum = 0;
    for (int i = 0; i + 1 < m; ++i) {
      const long v = uniform(rng, -range, range);
      comp.emplace_back(v);
      sum += v;
    }
    comp.emplace_back(-sum);
  }
  hz.z = uniform(rng, -2 * range, 2 * range);
  return hz;
}

inline std::vector<std::complex<double>> random_unit_vector(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> normal;
  std::vector<std::complex<double>> v(dim);
  double norm2 = 0;
  for (auto& x : v) {
    x = {normal(rng), normal(rng)};
    norm2 += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(norm2);
  return v;
}

// ---------------------------------------------------------------------------
// Reference implementations

// Rank by Gauss-Jordan over Rational (no fraction-free tricks).
inline std::size_t naive_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Laplace expansion along the first row.
inline Integer cofactor_det(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(a[r][j]);
      }
      minor.push_back(std::move(row));
    }
    const Integer term = a[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

// phi . H as an explicit inner product of block vectors.
inline Integer naive_dot(const std::vector<int>& v, const HyperplaneCandidate& hz) {
  Integer s = 0;
  const int m = hz.rank();
  for (int x = 0; x < 3; ++x) {
    for (int i = 0; i < m; ++i) s += Integer(v[static_cast<std::size_t>(x * m + i)]) * hz.H[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
  }
  return s;
}

// Character chi_lambda(mu) as the coefficient of x^{lambda + delta} in
// a_delta(x) * prod_i p_{mu_i}(x), with n = height(lambda) variables.
inline long long frobenius_character(const YoungDiagram& lambda, const YoungDiagram& mu) {
  using Poly = std::map<std::vector<int>, long long>;
  const int n = lambda.height();
  // Vandermonde determinant prod_{i<j} (x_i - x_j).
  Poly poly{{std::vector<int>(static_cast<std::size_t>(n), 0), 1}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Poly next;
      for (const auto& [mono, c] : poly) {
        auto a = mono;
        ++a[static_cast<std::size_t>(i)];
        next[a] += c;
        auto b = mono;
        ++b[static_cast<std::size_t>(j)];
        next[b] -= c;
      }
      poly = std::move(next);
    }
  }
  for (int part : mu.rows()) {
    Poly next;
    for (const auto& [mono, c] : poly) {
      for (int v = 0; v < n; ++v) {
        auto a = mono;
        a[static_cast<std::size_t>(v)] += part;
        next[a] += c;
      }
    }
    poly = std::move(next);
  }
  std::vector<int> target(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) target[static_cast<std::size_t>(i)] = lambda.rows()[static_cast<std::size_t>(i)] + n - 1 - i;
  const auto it = poly.find(target);
  return it == poly.end() ? 0 : it->second;
}

}  // namespace kt
