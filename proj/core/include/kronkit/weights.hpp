#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "kronkit/instance.hpp"
#include "kronkit/rational.hpp"

namespace kronkit {

/// Largest rank for which weight lists are materialized.
inline constexpr int kDefaultMaxRank = 12;

/// The weight (e_i, e_j, e_l) of (C^m)^{⊗3}; indices are 1-based.
struct Weight {
  int i = 1;
  int j = 1;
  int l = 1;

  int index(Subsystem s) const noexcept { return s == Subsystem::A ? i : (s == Subsystem::B ? j : l); }
  /// Concatenated block vector (e_i, e_j, e_l) in Z^{3m}.
  std::vector<int> vector_form(int m) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Negative root e_i - e_j (i > j) placed in one subsystem block.
struct NegativeRoot {
  Subsystem block = Subsystem::A;
  int i = 2;
  int j = 1;

  std::vector<int> vector_form(int m) const;

  friend bool operator==(const NegativeRoot&, const NegativeRoot&) = default;
};

/// A pair (H, z) with H in (Z^m_0)^3. Nothing is checked at construction;
/// `validate` reports shape and tracelessness problems.
struct HyperplaneCandidate {
  std::array<std::vector<Integer>, 3> H;
  Integer z;

  int rank() const noexcept { return static_cast<int>(H[0].size()); }
  const std::vector<Integer>& component(Subsystem s) const { return H[static_cast<int>(s)]; }

  /// Throws ShapeMismatch if a component does not have length m, or
  /// ComponentNotTraceless if a component does not sum to zero.
  void validate(int m) const;
  /// Only the ShapeMismatch part of validate().
  void check_shape(int m) const;

  HyperplaneCandidate negated() const;

  friend bool operator==(const HyperplaneCandidate&, const HyperplaneCandidate&) = default;
};

/// phi . H = H_A[i] + H_B[j] + H_C[l].
Integer dot(const Weight& w, const HyperplaneCandidate& h);
/// alpha . H = H_X[i] - H_X[j] for the root's block X.
Integer dot(const NegativeRoot& a, const HyperplaneCandidate& h);

/// All m^3 weights in lexicographic order. Throws RankTooLarge above max_rank.
std::vector<Weight> weights(int m, int max_rank = kDefaultMaxRank);

/// The 3 m(m-1)/2 negative roots, blocks A < B < C, then (i, j) lexicographic.
std::vector<NegativeRoot> negative_roots(int m);

struct WeightSplit {
  std::vector<Weight> equal;    // phi . H == z
  std::vector<Weight> less;     // phi . H <  z
  std::vector<Weight> greater;  // phi . H >  z
};

WeightSplit split_weights(const HyperplaneCandidate& h, int m);

/// Roots with alpha . H < 0, canonical order preserved.
std::vector<NegativeRoot> negative_roots_on(const HyperplaneCandidate& h, int m);

/// Rank over Q of the (3m+1) x |S| matrix with columns (phi; -1).
std::size_t affine_rank(std::span<const Weight> s, int m);

}  // namespace kronkit
