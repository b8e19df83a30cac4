#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kronkit/instance.hpp"
#include "kronkit/rational.hpp"
#include "kronkit/verdict.hpp"
#include "kronkit/weights.hpp"

namespace kronkit {

/// The square matrix D_{H,z}. Rows are Phi(H<z), columns N(H<0), both in
/// canonical order. Each entry is either the ordinal of a variable X_phi
/// (phi's position within the canonically ordered Phi(H=z)) or kZero.
class PolyMatrix {
 public:
  static constexpr int kZero = -1;

  PolyMatrix() = default;
  PolyMatrix(std::size_t n, std::size_t num_slots) : n_(n), num_slots_(num_slots), slots_(n * n, kZero) {}

  std::size_t size() const noexcept { return n_; }
  /// Number of indeterminates, #Phi(H=z).
  std::size_t num_slots() const noexcept { return num_slots_; }

  int slot(std::size_t row, std::size_t col) const { return slots_[row * n_ + col]; }
  void set_slot(std::size_t row, std::size_t col, int s) { slots_[row * n_ + col] = s; }

  std::vector<Weight> row_weights;
  std::vector<NegativeRoot> col_roots;
  std::vector<Weight> slot_weights;

 private:
  std::size_t n_ = 0;
  std::size_t num_slots_ = 0;
  std::vector<int> slots_;
};

/// (H, z, p): p is aligned with the canonical order of Phi(H=z).
struct RessayreCertificate {
  HyperplaneCandidate hz;
  std::vector<Integer> p;
};

/// Phi(H=z) spans an affine hyperplane of P(m), i.e. its affine rank is
/// 3(m-1). Throws ComponentNotTraceless / ShapeMismatch.
bool check_admissible(const HyperplaneCandidate& hz, int m);

/// #N(H<0) == #Phi(H<z).
bool check_trace(const HyperplaneCandidate& hz, int m);

/// Throws NotSquare when the trace condition fails.
PolyMatrix build_det_matrix(const HyperplaneCandidate& hz, int m);

/// det D_{H,z}(p). Throws LengthMismatch if p.size() != num_slots().
Integer eval_determinant(const PolyMatrix& d, std::span<const Integer> p);

/// The coNP verifier. Runs admissibility, trace, certificate shape,
/// determinant and finally H . lambda < k z; the verdict names the first
/// failing check. Accept implies lambda/k lies outside Kron(m).
Verdict verify_nonmembership(const KronInstance& inst, const RessayreCertificate& cert);

/// H . (lambda_A, lambda_B, lambda_C) with zero padding to rank m.
Integer pair_with_instance(const HyperplaneCandidate& hz, const KronInstance& inst);

/// (4m)^{3m}: bound on the entries of some Ressayre element for every
/// non-trivial facet of Kron(m).
Integer siegel_bound(int m);

/// 1 / (k (4m)^{4m}): distance lower bound from an outside point to Kron(m).
Rational min_gap(int m, int k);

}  // namespace kronkit
