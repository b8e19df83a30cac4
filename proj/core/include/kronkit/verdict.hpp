#pragma once

#include <string_view>

namespace kronkit {

enum class Decision { Accept, Reject };

enum class Reason {
  // Non-membership certificates, in the order the checks run.
  NotAdmissible,
  TraceMismatch,
  MalformedCertificate,  // p does not match #Phi(H=z)
  DeterminantVanishes,
  InequalityNotViolated,
  Separated,  // all checks passed
  // Membership certificates.
  InThreshold,
  OutOfThreshold,
};

std::string_view to_string(Decision d) noexcept;
std::string_view to_string(Reason r) noexcept;

struct Verdict {
  Decision decision = Decision::Reject;
  Reason reason = Reason::NotAdmissible;

  bool accepted() const noexcept { return decision == Decision::Accept; }

  static Verdict accept(Reason r) noexcept { return {Decision::Accept, r}; }
  static Verdict reject(Reason r) noexcept { return {Decision::Reject, r}; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace kronkit
