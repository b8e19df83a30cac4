#include "kronkit/oracle.hpp"

#include <algorithm>
#include <functional>

#include "kronkit/error.hpp"

namespace kronkit {

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.push_back(parse_young(std::span<const int>(prefix)));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace

std::vector<YoungDiagram> partitions(int k) {
  std::vector<YoungDiagram> out;
  std::vector<int> prefix;
  if (k > 0) partitions_into(k, k, prefix, out);
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(int k) {
  std::vector<ConjugacyClass> out;
  const Integer k_fact = factorial(k);
  for (auto& mu : partitions(k)) {
    Integer z = 1;
    const auto& rows = mu.rows();
    for (std::size_t i = 0; i < rows.size();) {
      std::size_t j = i;
      while (j < rows.size() && rows[j] == rows[i]) ++j;
      const auto mult = static_cast<unsigned long>(j - i);
      z *= ipow(Integer(rows[i]), mult) * factorial(static_cast<int>(mult));
      i = j;
    }
    out.push_back({std::move(mu), k_fact / z, z});
  }
  return out;
}

long long CharacterEvaluator::operator()(const YoungDiagram& lambda, const YoungDiagram& mu) {
  if (lambda.boxes() != mu.boxes()) {
    throw Error(Errc::BoxCountMismatch, "character of a shape with " + std::to_string(lambda.boxes()) +
                                            " boxes at a class of S_" + std::to_string(mu.boxes()));
  }
  return evaluate(lambda.rows(), mu.rows(), 0);
}

long long CharacterEvaluator::evaluate(const std::vector<int>& shape, const std::vector<int>& cycles,
                                       std::size_t next) {
  if (next == cycles.size()) return shape.empty() ? 1 : 0;
  std::vector<int> rest(cycles.begin() + static_cast<std::ptrdiff_t>(next), cycles.end());
  auto key = std::make_pair(shape, rest);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // Beta-set of the shape: beta_i = shape_i + (n - 1 - i), strictly decreasing.
  const int n = static_cast<int>(shape.size());
  std::vector<int> beta(shape.size());
  for (int i = 0; i < n; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (n - 1 - i);

  // Removing a rim hook of length r moves one bead from b to b - r.
  const int r = cycles[next];
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    // Leg length = beads strictly between `to` and `from`.
    const auto crossed = std::count_if(beta.begin(), beta.end(), [&](int x) { return x > to && x < from; });
    std::vector<int> moved(beta);
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> smaller;
    for (int j = 0; j < n; ++j) {
      const int part = moved[static_cast<std::size_t>(j)] - (n - 1 - j);
      if (part > 0) smaller.push_back(part);
    }
    const long long sub = evaluate(smaller, cycles, next + 1);
    total += (crossed % 2 == 0) ? sub : -sub;
  }
  memo_.emplace(std::move(key), total);
  return total;
}

long long mn_character(const YoungDiagram& lambda, const YoungDiagram& mu) {
  CharacterEvaluator chars;
  return chars(lambda, mu);
}

Integer kron_coeff(const YoungDiagram& a, const YoungDiagram& b, const YoungDiagram& c, CharacterEvaluator& chars) {
  const int k = a.boxes();
  if (b.boxes() != k || c.boxes() != k) {
    throw Error(Errc::BoxCountMismatch, "Kronecker coefficient needs three partitions of the same size");
  }
  // sum_mu |C_mu| chi chi chi, divided by k! at the end.
  Integer total = 0;
  for (const auto& cls : conjugacy_classes(k)) {
    const Integer prod = Integer(static_cast<long>(chars(a, cls.cycle_type))) *
                         Integer(static_cast<long>(chars(b, cls.cycle_type))) *
                         Integer(static_cast<long>(chars(c, cls.cycle_type)));
    total += cls.size * prod;
  }
  const Integer k_fact = factorial(k);
  if (total % k_fact != 0 || total < 0) {
    throw Error(Errc::InternalNonInteger, "character sum " + total.get_str() + " is not a non-negative multiple of " +
                                              k_fact.get_str());
  }
  return total / k_fact;
}

Integer kron_coeff(const YoungDiagram& a, const YoungDiagram& b, const YoungDiagram& c) {
  CharacterEvaluator chars;
  return kron_coeff(a, b, c, chars);
}

std::optional<int> semigroup_member(const KronInstance& inst, int l_max, int cap) {
  if (static_cast<long long>(l_max) * inst.k() > cap) {
    throw Error(Errc::CapExceeded, "l_max * k = " + std::to_string(static_cast<long long>(l_max) * inst.k()) +
                                       " exceeds the cap " + std::to_string(cap));
  }
  CharacterEvaluator chars;
  for (int l = 1; l <= l_max; ++l) {
    const auto s = inst.stretched(l);
    if (sgn(kron_coeff(s.lambda(Subsystem::A), s.lambda(Subsystem::B), s.lambda(Subsystem::C), chars)) > 0) {
      return l;
    }
  }
  return std::nullopt;
}

}  // namespace kronkit
