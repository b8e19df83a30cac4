#include "kronkit/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "kronkit/error.hpp"

namespace kronkit {

namespace {

std::size_t cube(int m) {
  const auto mm = static_cast<std::size_t>(m);
  return mm * mm * mm;
}

// Contracts psi with conj(psi) over every tensor factor except `keep`.
GaussianMatrix partial_trace(const MembershipCertificate& cert, Subsystem keep) {
  const int m = cert.m();
  GaussianMatrix out(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  // Position of the kept index among (a, b, c).
  const int pos = static_cast<int>(keep);
  auto entry = [&](int kept, int o1, int o2) -> const GaussianRational& {
    switch (pos) {
      case 0: return cert.at(kept, o1, o2);
      case 1: return cert.at(o1, kept, o2);
      default: return cert.at(o1, o2, kept);
    }
  };
  for (int a = 1; a <= m; ++a) {
    for (int ap = a; ap <= m; ++ap) {
      GaussianRational sum;
      for (int o1 = 1; o1 <= m; ++o1) {
        for (int o2 = 1; o2 <= m; ++o2) {
          const auto& x = entry(a, o1, o2);
          const auto& y = entry(ap, o1, o2);
          if (x.is_zero() || y.is_zero()) continue;
          sum += x * y.conj();
        }
      }
      out(static_cast<std::size_t>(ap - 1), static_cast<std::size_t>(a - 1)) = sum.conj();
      out(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(ap - 1)) = std::move(sum);
    }
  }
  return out;
}

}  // namespace

MembershipCertificate::MembershipCertificate(int m) : m_(m), amps_(cube(m)) {}

MembershipCertificate::MembershipCertificate(int m, std::vector<GaussianRational> amplitudes)
    : m_(m), amps_(std::move(amplitudes)) {
  if (m < 1 || amps_.size() != cube(m)) {
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(cube(std::max(m, 0))) + " amplitudes, got " +
                                         std::to_string(amps_.size()));
  }
}

const GaussianRational& MembershipCertificate::at(int a, int b, int c) const {
  return amps_[weight_index(m_, a, b, c)];
}

void MembershipCertificate::set(int a, int b, int c, GaussianRational value) {
  amps_[weight_index(m_, a, b, c)] = std::move(value);
}

bool MembershipCertificate::is_zero() const {
  return std::all_of(amps_.begin(), amps_.end(), [](const auto& x) { return x.is_zero(); });
}

MembershipCertificate MembershipCertificate::scaled(const GaussianRational& s) const {
  MembershipCertificate out(*this);
  for (auto& x : out.amps_) x *= s;
  return out;
}

DensityTriple reduced_densities(const MembershipCertificate& cert) {
  Rational norm2;
  for (const auto& x : cert.amplitudes()) norm2 += x.norm2();
  if (norm2.is_zero()) throw Error(Errc::ZeroVector, "certificate vector is zero");

  DensityTriple out;
  for (Subsystem s : kSubsystems) {
    GaussianMatrix rho = partial_trace(cert, s);
    for (std::size_t r = 0; r < rho.rows(); ++r) {
      for (std::size_t c = 0; c < rho.cols(); ++c) {
        rho(r, c).re /= norm2;
        rho(r, c).im /= norm2;
      }
    }
    out.rho[static_cast<int>(s)] = std::move(rho);
  }
  return out;
}

Eigen::MatrixXcd to_complex(const GaussianMatrix& rho) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(rho.rows()), static_cast<Eigen::Index>(rho.cols()));
  for (std::size_t r = 0; r < rho.rows(); ++r) {
    for (std::size_t c = 0; c < rho.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {rho(r, c).re.to_double(),
                                                                         rho(r, c).im.to_double()};
    }
  }
  return out;
}

bool densities_look_psd(const DensityTriple& rho, double tol) {
  for (Subsystem s : kSubsystems) {
    const auto spec = sorted_spectrum(to_complex(rho[s]));
    if (!spec.empty() && spec.back() < -tol) return false;
  }
  return true;
}

Rational accept_threshold2(int m, int k) {
  const Integer radius_inv = Integer(2 * k) * ipow(Integer(4 * m), static_cast<unsigned long>(4 * m));
  return Rational(Integer(1), radius_inv * radius_inv);
}

Rational frobenius_gap2(const DensityTriple& rho, const KronInstance& inst) {
  const int m = inst.m();
  Rational total;
  for (Subsystem s : kSubsystems) {
    const auto& mat = rho[s];
    if (mat.rows() != static_cast<std::size_t>(m) || mat.cols() != static_cast<std::size_t>(m)) {
      throw Error(Errc::ShapeMismatch, "density matrix rank does not match instance rank m=" + std::to_string(m));
    }
    const auto lam = inst.padded(s);
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      for (std::size_t c = 0; c < mat.cols(); ++c) {
        if (r == c) {
          const Rational d = mat(r, c).re - Rational(Integer(lam[r]), Integer(inst.k()));
          total += d * d + mat(r, c).im * mat(r, c).im;
        } else {
          total += mat(r, c).norm2();
        }
      }
    }
  }
  return total;
}

MembershipReport check_membership(const KronInstance& inst, const MembershipCertificate& cert) {
  if (cert.m() != inst.m()) {
    throw Error(Errc::ShapeMismatch, "certificate rank " + std::to_string(cert.m()) + " differs from instance rank " +
                                         std::to_string(inst.m()));
  }
  MembershipReport report;
  report.gap2 = frobenius_gap2(reduced_densities(cert), inst);
  report.threshold2 = accept_threshold2(inst.m(), inst.k());
  report.verdict = report.gap2 <= report.threshold2 ? Verdict::accept(Reason::InThreshold)
                                                    : Verdict::reject(Reason::OutOfThreshold);
  return report;
}

long required_bits(int m, int k) {
  // 5 sqrt(3) m^{3/4} 2^{-b/2} <= 1/R  <=>  5625 m^3 R^4 <= 2^{2b}, R = 2k (4m)^{4m}.
  const Integer radius_inv = Integer(2 * k) * ipow(Integer(4 * m), static_cast<unsigned long>(4 * m));
  const Integer lhs = Integer(5625) * ipow(Integer(m), 3) * ipow(radius_inv, 4);
  // Smallest e with 2^e >= lhs.
  const Integer below = lhs - 1;
  const long e = static_cast<long>(mpz_sizeinbase(below.get_mpz_t(), 2));
  return (e + 1) / 2;
}

MembershipCertificate truncate(std::span<const std::complex<double>> v, long b) {
  int m = 1;
  while (cube(m) < v.size()) ++m;
  if (v.empty() || cube(m) != v.size()) {
    throw Error(Errc::ShapeMismatch, "vector length " + std::to_string(v.size()) + " is not a cube");
  }
  const Integer scale = ipow(Integer(2), static_cast<unsigned long>(b));
  auto cut = [&](double x) {
    mpq_class q(x);  // exact
    q *= scale;
    Integer t;
    mpz_tdiv_q(t.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(t, scale);
  };
  std::vector<GaussianRational> amps;
  amps.reserve(v.size());
  for (const auto& z : v) amps.emplace_back(cut(z.real()), cut(z.imag()));
  MembershipCertificate cert(m, std::move(amps));
  if (cert.is_zero()) throw Error(Errc::TruncatedToZero, "every entry is below 2^-" + std::to_string(b));
  return cert;
}

std::vector<double> sorted_spectrum(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) throw Error(Errc::NotHermitian, "matrix is not square");
  if (rho.size() > 0 && (rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(Errc::NotHermitian, "matrix deviates from its adjoint by more than 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace kronkit
