#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kronkit/instance.hpp"
#include "kronkit/rational.hpp"

namespace kronkit {

/// Default cap on l * k for stretched coefficients.
inline constexpr int kDefaultOracleCap = 12;

/// All partitions of k, in reverse lexicographic order ((k) first).
std::vector<YoungDiagram> partitions(int k);

struct ConjugacyClass {
  YoungDiagram cycle_type;
  Integer size;         // |C_mu|
  Integer centralizer;  // z_mu = prod_i i^{m_i} m_i!
};

/// Conjugacy classes of S_k, ordered like partitions(k).
std::vector<ConjugacyClass> conjugacy_classes(int k);

/// Irreducible characters of symmetric groups by the Murnaghan-Nakayama
/// rule on beta-sets, memoized on (remaining shape, remaining cycle type).
/// Not thread-safe; use one evaluator per thread.
class CharacterEvaluator {
 public:
  /// chi_lambda(mu). Throws BoxCountMismatch.
  long long operator()(const YoungDiagram& lambda, const YoungDiagram& mu);

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  long long evaluate(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t next);
  std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo_;
};

/// One-shot convenience wrapper around CharacterEvaluator.
long long mn_character(const YoungDiagram& lambda, const YoungDiagram& mu);

/// g(lambda_A, lambda_B, lambda_C) = sum_mu chi_A chi_B chi_C / z_mu.
/// Throws BoxCountMismatch, or InternalNonInteger if the sum is not a
/// non-negative integer.
Integer kron_coeff(const YoungDiagram& a, const YoungDiagram& b, const YoungDiagram& c);
Integer kron_coeff(const YoungDiagram& a, const YoungDiagram& b, const YoungDiagram& c, CharacterEvaluator& chars);

/// Smallest l <= l_max with g(l lambda) > 0, or nullopt ("unknown": a larger
/// stretching factor may still work). Throws CapExceeded if l_max * k > cap.
std::optional<int> semigroup_member(const KronInstance& inst, int l_max, int cap = kDefaultOracleCap);

}  // namespace kronkit
