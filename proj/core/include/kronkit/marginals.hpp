#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "kronkit/exact_linalg.hpp"
#include "kronkit/instance.hpp"
#include "kronkit/rational.hpp"
#include "kronkit/verdict.hpp"

namespace kronkit {

/// Amplitudes of psi in (Q[i]^m)^{⊗3}, stored densely in weight_index
/// order. Zero entries are "absent" in the sparse file format.
class MembershipCertificate {
 public:
  MembershipCertificate() = default;
  /// All-zero certificate of rank m.
  explicit MembershipCertificate(int m);
  /// Throws ShapeMismatch unless amplitudes.size() == m^3.
  MembershipCertificate(int m, std::vector<GaussianRational> amplitudes);

  int m() const noexcept { return m_; }
  const GaussianRational& at(int a, int b, int c) const;
  void set(int a, int b, int c, GaussianRational value);
  std::span<const GaussianRational> amplitudes() const noexcept { return amps_; }
  bool is_zero() const;

  /// Every amplitude multiplied by s.
  MembershipCertificate scaled(const GaussianRational& s) const;

 private:
  int m_ = 0;
  std::vector<GaussianRational> amps_;
};

using GaussianMatrix = Matrix<GaussianRational>;

/// Exact reduced density matrices rho_A, rho_B, rho_C.
struct DensityTriple {
  std::array<GaussianMatrix, 3> rho;

  const GaussianMatrix& operator[](Subsystem s) const { return rho[static_cast<int>(s)]; }
  int m() const noexcept { return static_cast<int>(rho[0].rows()); }
};

/// (rho_A)_{a,a'} = sum_{b,c} psi_{abc} conj(psi_{a'bc}) / ||psi||^2, and
/// likewise for B and C. Throws ZeroVector.
DensityTriple reduced_densities(const MembershipCertificate& cert);

/// Floating-point check that each matrix has eigenvalues >= -tol.
bool densities_look_psd(const DensityTriple& rho, double tol = 1e-12);

/// (1 / (2k (4m)^{4m}))^2, the squared acceptance radius.
Rational accept_threshold2(int m, int k);

/// Sum over X of ||rho_X - diag(lambda_X)/k||_F^2. Throws ShapeMismatch.
Rational frobenius_gap2(const DensityTriple& rho, const KronInstance& inst);

struct MembershipReport {
  Verdict verdict;
  Rational gap2;
  Rational threshold2;
};

/// The NP verifier: accept iff gap^2 <= threshold^2, compared exactly.
/// Throws ZeroVector or ShapeMismatch.
MembershipReport check_membership(const KronInstance& inst, const MembershipCertificate& cert);
inline Verdict verify_membership(const KronInstance& inst, const MembershipCertificate& cert) {
  return check_membership(inst, cert).verdict;
}

/// Smallest b with 5 sqrt(3) m^{3/4} 2^{-b/2} <= 1 / (2k (4m)^{4m}).
/// Truncating an exact preimage to b bits is then always accepted.
long required_bits(int m, int k);

/// Rounds the real and imaginary parts of every entry toward zero at
/// granularity 2^-b. v.size() must be a perfect cube m^3.
/// Throws ShapeMismatch or TruncatedToZero.
MembershipCertificate truncate(std::span<const std::complex<double>> v, long b);

/// Eigenvalues of a Hermitian matrix in non-increasing order. Throws
/// NotHermitian when ||A - A^*||_max exceeds 1e-10.
std::vector<double> sorted_spectrum(const Eigen::MatrixXcd& rho);

/// Exact density matrix converted to doubles.
Eigen::MatrixXcd to_complex(const GaussianMatrix& rho);

}  // namespace kronkit
