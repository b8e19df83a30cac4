#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kronkit/marginals.hpp"
#include "kronkit/ressayre.hpp"
#include "kronkit/weights.hpp"

namespace kronkit {

/// A Ressayre element together with a point where its determinant
/// polynomial does not vanish.
struct RessayreElement {
  HyperplaneCandidate hz;
  std::vector<Integer> witness_point;
  bool primitive = true;  // gcd of all entries of (H, z) is 1

  RessayreCertificate certificate() const { return {hz, witness_point}; }
};

/// Inequalities r . H >= z describing Kron(m): the Ressayre elements found by
/// enumeration plus the chamber r_{X,i} >= r_{X,i+1} and r_{X,m} >= 0.
struct FacetSystem {
  int m = 1;
  std::vector<RessayreElement> nontrivial;
  std::vector<HyperplaneCandidate> chamber;
};

/// Chamber and simplex inequalities of P_+(m) written as (H, z) pairs with
/// traceless H. Empty for m = 1.
std::vector<HyperplaneCandidate> chamber_inequalities(int m);

/// Seeded uniform sampling of p in {0..m^3}^{num_slots} until det D(p) != 0.
std::optional<std::vector<Integer>> find_point(const PolyMatrix& d, int m, std::uint64_t seed, int trials);
/// Throws NotSquare when the trace condition fails.
std::optional<std::vector<Integer>> find_point(const HyperplaneCandidate& hz, int m, std::uint64_t seed, int trials);

struct EnumerationOptions {
  int max_rank = 3;
  std::uint64_t budget = 1'000'000;  // maximal number of weight subsets
  int threads = 1;
  int trials = 32;  // find_point attempts per orientation
  std::uint64_t seed = 0;
};

/// Enumerates candidate hyperplanes spanned by 3(m-1) affinely independent
/// weights, keeps the orientations passing all three Ressayre conditions and
/// deduplicates them. Output order is the order in which the spanning weight
/// subsets first appear lexicographically, independent of `threads`.
/// Throws RankTooLarge above max_rank or BudgetExceeded.
FacetSystem enumerate_ressayre(int m, const EnumerationOptions& opts = {});

/// Drops every nontrivial inequality implied by the chamber and the other
/// remaining inequalities, decided by exact linear programming.
FacetSystem reduce_irredundant(const FacetSystem& fs);

/// r . H - z evaluated at a spectrum triple (floating point).
double slack(const HyperplaneCandidate& hz, const std::array<std::vector<double>, 3>& r);
/// r . H - z at the rational point lambda/k, times k (exact).
Integer scaled_slack(const HyperplaneCandidate& hz, const KronInstance& inst);

struct WitnessOptions {
  std::uint64_t seed = 0;
  int max_iters = 20000;  // descent steps per restart
  int restarts = 8;
};

/// Heuristic preimage search for lambda/k under the marginal-spectrum map.
/// Only certificates accepted by verify_membership are returned.
std::optional<MembershipCertificate> search_witness(const KronInstance& inst, const WitnessOptions& opts = {});

using SpectrumTriple = std::array<std::vector<double>, 3>;

/// Non-increasing marginal spectra of n seeded complex Gaussian vectors in
/// dimension m^3. Deterministic for a fixed seed.
std::vector<SpectrumTriple> sample_spectra(int m, std::size_t n, std::uint64_t seed);

}  // namespace kronkit
