#include "kronkit/ressayre.hpp"

#include "kronkit/error.hpp"
#include "kronkit/exact_linalg.hpp"

namespace kronkit {

std::string_view to_string(Decision d) noexcept { return d == Decision::Accept ? "Accept" : "Reject"; }

std::string_view to_string(Reason r) noexcept {
  switch (r) {
    case Reason::NotAdmissible: return "NotAdmissible";
    case Reason::TraceMismatch: return "TraceMismatch";
    case Reason::MalformedCertificate: return "MalformedCertificate";
    case Reason::DeterminantVanishes: return "DeterminantVanishes";
    case Reason::InequalityNotViolated: return "InequalityNotViolated";
    case Reason::Separated: return "Separated";
    case Reason::InThreshold: return "InThreshold";
    case Reason::OutOfThreshold: return "OutOfThreshold";
  }
  return "Unknown";
}

namespace {

Weight replace_index(Weight w, Subsystem s, int value) {
  (s == Subsystem::A ? w.i : (s == Subsystem::B ? w.j : w.l)) = value;
  return w;
}

}  // namespace

bool check_admissible(const HyperplaneCandidate& hz, int m) {
  hz.validate(m);
  const auto split = split_weights(hz, m);
  return affine_rank(split.equal, m) == static_cast<std::size_t>(3 * (m - 1));
}

bool check_trace(const HyperplaneCandidate& hz, int m) {
  return negative_roots_on(hz, m).size() == split_weights(hz, m).less.size();
}

PolyMatrix build_det_matrix(const HyperplaneCandidate& hz, int m) {
  auto split = split_weights(hz, m);
  auto roots = negative_roots_on(hz, m);
  if (roots.size() != split.less.size()) {
    throw Error(Errc::NotSquare, "#Phi(H<z)=" + std::to_string(split.less.size()) +
                                     " but #N(H<0)=" + std::to_string(roots.size()));
  }
  const auto cube = static_cast<std::size_t>(m) * static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  std::vector<int> slot_of(cube, PolyMatrix::kZero);
  for (std::size_t s = 0; s < split.equal.size(); ++s) {
    const Weight& w = split.equal[s];
    slot_of[weight_index(m, w.i, w.j, w.l)] = static_cast<int>(s);
  }

  PolyMatrix d(split.less.size(), split.equal.size());
  for (std::size_t r = 0; r < split.less.size(); ++r) {
    const Weight& omega = split.less[r];
    for (std::size_t c = 0; c < roots.size(); ++c) {
      const NegativeRoot& alpha = roots[c];
      // omega - alpha is a weight only when omega carries e_i in alpha's block;
      // the difference then carries e_j there instead.
      if (omega.index(alpha.block) != alpha.i) continue;
      const Weight phi = replace_index(omega, alpha.block, alpha.j);
      d.set_slot(r, c, slot_of[weight_index(m, phi.i, phi.j, phi.l)]);
    }
  }
  d.row_weights = std::move(split.less);
  d.col_roots = std::move(roots);
  d.slot_weights = std::move(split.equal);
  return d;
}

Integer eval_determinant(const PolyMatrix& d, std::span<const Integer> p) {
  if (p.size() != d.num_slots()) {
    throw Error(Errc::LengthMismatch, "point has " + std::to_string(p.size()) + " coordinates, matrix has " +
                                          std::to_string(d.num_slots()) + " variables");
  }
  const std::size_t n = d.size();
  IntegerMatrix mat(n, n, Integer(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const int s = d.slot(r, c);
      if (s != PolyMatrix::kZero) mat(r, c) = p[static_cast<std::size_t>(s)];
    }
  }
  return bareiss_determinant(std::move(mat));
}

Integer pair_with_instance(const HyperplaneCandidate& hz, const KronInstance& inst) {
  Integer total = 0;
  for (Subsystem s : kSubsystems) {
    const auto lam = inst.padded(s);
    const auto& comp = hz.component(s);
    for (std::size_t i = 0; i < lam.size(); ++i) total += comp[i] * lam[i];
  }
  return total;
}

Verdict verify_nonmembership(const KronInstance& inst, const RessayreCertificate& cert) {
  const int m = inst.m();
  const HyperplaneCandidate& hz = cert.hz;
  hz.validate(m);

  if (!check_admissible(hz, m)) return Verdict::reject(Reason::NotAdmissible);
  if (!check_trace(hz, m)) return Verdict::reject(Reason::TraceMismatch);

  const PolyMatrix d = build_det_matrix(hz, m);
  if (cert.p.size() != d.num_slots()) return Verdict::reject(Reason::MalformedCertificate);
  if (eval_determinant(d, cert.p) == 0) return Verdict::reject(Reason::DeterminantVanishes);

  if (pair_with_instance(hz, inst) < Integer(inst.k()) * hz.z) return Verdict::accept(Reason::Separated);
  return Verdict::reject(Reason::InequalityNotViolated);
}

Integer siegel_bound(int m) {
  return ipow(Integer(4 * m), static_cast<unsigned long>(3 * m));
}

Rational min_gap(int m, int k) {
  return Rational(Integer(1), Integer(k) * ipow(Integer(4 * m), static_cast<unsigned long>(4 * m)));
}

}  // namespace kronkit
