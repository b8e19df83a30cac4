#include "kronkit/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "exact_lp.hpp"
#include "kronkit/error.hpp"

namespace kronkit {

// ---------------------------------------------------------------------------
// Chamber and Schwartz-Zippel point search

std::vector<HyperplaneCandidate> chamber_inequalities(int m) {
  std::vector<HyperplaneCandidate> out;
  if (m < 2) return out;
  const auto mm = static_cast<std::size_t>(m);
  auto blank = [&] {
    HyperplaneCandidate hz;
    for (auto& comp : hz.H) comp.assign(mm, Integer(0));
    return hz;
  };
  for (int x = 0; x < 3; ++x) {
    // r_{X,i} - r_{X,i+1} >= 0
    for (std::size_t i = 0; i + 1 < mm; ++i) {
      auto hz = blank();
      hz.H[static_cast<std::size_t>(x)][i] = 1;
      hz.H[static_cast<std::size_t>(x)][i + 1] = -1;
      hz.z = 0;
      out.push_back(std::move(hz));
    }
    // m r_{X,m} - sum_i r_{X,i} >= -1, i.e. r_{X,m} >= 0 on P(m)
    auto hz = blank();
    for (std::size_t i = 0; i + 1 < mm; ++i) hz.H[static_cast<std::size_t>(x)][i] = -1;
    hz.H[static_cast<std::size_t>(x)][mm - 1] = m - 1;
    hz.z = -1;
    out.push_back(std::move(hz));
  }
  return out;
}

std::optional<std::vector<Integer>> find_point(const PolyMatrix& d, int m, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(0, static_cast<long>(m) * m * m);
  std::vector<Integer> p(d.num_slots());
  for (int t = 0; t < trials; ++t) {
    for (auto& x : p) x = coord(rng);
    if (eval_determinant(d, p) != 0) return p;
    if (d.num_slots() == 0) break;  // nothing to resample
  }
  return std::nullopt;
}

std::optional<std::vector<Integer>> find_point(const HyperplaneCandidate& hz, int m, std::uint64_t seed, int trials) {
  return find_point(build_det_matrix(hz, m), m, seed, trials);
}

// ---------------------------------------------------------------------------
// Enumeration of Ressayre elements

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("hyperplane solve overflowed 64 bits");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("hyperplane solve overflowed 64 bits");
  return out;
}

void divide_by_content(std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

// Primitive integer generator of the kernel of `rows`, provided the kernel
// is one-dimensional. Sign is fixed so the first nonzero entry is positive.
std::optional<std::vector<std::int64_t>> kernel_line(std::vector<std::vector<std::int64_t>> rows, std::size_t ncols) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::int64_t p = rows[r][c];
      const std::int64_t f = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j) {
        rows[i][j] = checked_sub(checked_mul(p, rows[i][j]), checked_mul(f, rows[r][j]));
      }
      divide_by_content(rows[i]);
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (pivot_col.size() + 1 != ncols) return std::nullopt;

  std::size_t free_col = ncols - 1;
  for (std::size_t c = 0, k = 0; c < ncols; ++c) {
    if (k < pivot_col.size() && pivot_col[k] == c) {
      ++k;
    } else {
      free_col = c;
      break;
    }
  }
  std::int64_t lcm = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) lcm = std::lcm(lcm, std::abs(rows[i][pivot_col[i]]));
  std::vector<std::int64_t> x(ncols, 0);
  x[free_col] = lcm;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    const std::int64_t a = rows[i][pivot_col[i]];
    x[pivot_col[i]] = -checked_mul(rows[i][free_col], lcm / a);
  }
  divide_by_content(x);
  const auto first = std::find_if(x.begin(), x.end(), [](std::int64_t v) { return v != 0; });
  if (first != x.end() && *first < 0) {
    for (auto& v : x) v = -v;
  }
  return x;
}

// Layout of a hyperplane key: H_A (m), H_B (m), H_C (m), z.
HyperplaneCandidate to_candidate(const std::vector<std::int64_t>& key, int m, int sign) {
  HyperplaneCandidate hz;
  for (int x = 0; x < 3; ++x) {
    for (int i = 0; i < m; ++i) {
      hz.H[static_cast<std::size_t>(x)].emplace_back(static_cast<long>(sign * key[static_cast<std::size_t>(x * m + i)]));
    }
  }
  hz.z = static_cast<long>(sign * key.back());
  return hz;
}

// Trace condition on the 64-bit key, used as a cheap prefilter.
bool trace_holds(const std::vector<std::int64_t>& key, int m, int sign, std::span<const Weight> all) {
  auto h = [&](int x, int i) { return sign * key[static_cast<std::size_t>(x * m + i - 1)]; };
  const std::int64_t z = sign * key.back();
  std::size_t roots = 0;
  for (int x = 0; x < 3; ++x) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j < i; ++j) roots += (h(x, i) - h(x, j) < 0) ? 1 : 0;
    }
  }
  std::size_t below = 0;
  for (const Weight& w : all) below += (h(0, w.i) + h(1, w.j) + h(2, w.l) < z) ? 1 : 0;
  return roots == below;
}

using KeyMap = std::map<std::vector<std::int64_t>, std::uint64_t>;

// Visits every `size`-subset of {0..n-1} in lexicographic order and solves
// the spanning system for those with sequence number = worker (mod workers).
KeyMap scan_subsets(int m, std::span<const Weight> all, std::size_t size, unsigned worker, unsigned workers) {
  KeyMap found;
  const std::size_t n = all.size();
  const auto ncols = static_cast<std::size_t>(3 * m + 1);
  std::vector<std::size_t> comb(size);
  std::iota(comb.begin(), comb.end(), 0);

  std::vector<std::vector<std::int64_t>> trace_rows;
  for (int x = 0; x < 3; ++x) {
    std::vector<std::int64_t> row(ncols, 0);
    for (int i = 0; i < m; ++i) row[static_cast<std::size_t>(x * m + i)] = 1;
    trace_rows.push_back(std::move(row));
  }

  for (std::uint64_t seq = 0;; ++seq) {
    if (seq % workers == worker) {
      auto rows = trace_rows;
      for (std::size_t idx : comb) {
        const Weight& w = all[idx];
        std::vector<std::int64_t> row(ncols, 0);
        row[static_cast<std::size_t>(w.i - 1)] = 1;
        row[static_cast<std::size_t>(m + w.j - 1)] = 1;
        row[static_cast<std::size_t>(2 * m + w.l - 1)] = 1;
        row.back() = -1;
        rows.push_back(std::move(row));
      }
      if (auto key = kernel_line(std::move(rows), ncols)) found.emplace(std::move(*key), seq);
    }
    // Next combination.
    std::size_t i = size;
    while (i > 0 && comb[i - 1] == n - size + i - 1) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < size; ++j) comb[j] = comb[j - 1] + 1;
  }
  return found;
}

}  // namespace

FacetSystem enumerate_ressayre(int m, const EnumerationOptions& opts) {
  if (m < 1) throw Error(Errc::IndexOutOfRange, "rank must be positive");
  if (m > opts.max_rank) {
    throw Error(Errc::RankTooLarge, "enumeration is capped at m=" + std::to_string(opts.max_rank));
  }
  FacetSystem fs;
  fs.m = m;
  fs.chamber = chamber_inequalities(m);
  if (m == 1) return fs;  // P(1) is a point

  const auto all = weights(m);
  const auto size = static_cast<std::size_t>(3 * (m - 1));
  Integer count;
  mpz_bin_uiui(count.get_mpz_t(), all.size(), size);
  if (count > Integer(static_cast<unsigned long>(opts.budget))) {
    throw Error(Errc::BudgetExceeded, count.get_str() + " weight subsets exceed the budget of " +
                                          std::to_string(opts.budget));
  }

  const unsigned workers = static_cast<unsigned>(std::max(1, opts.threads));
  std::vector<KeyMap> partial(workers);
  if (workers == 1) {
    partial[0] = scan_subsets(m, all, size, 0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { partial[w] = scan_subsets(m, all, size, w, workers); });
    }
    for (auto& t : pool) t.join();
  }
  KeyMap merged;
  for (auto& part : partial) {
    for (auto& [key, seq] : part) {
      auto [it, inserted] = merged.emplace(key, seq);
      if (!inserted) it->second = std::min(it->second, seq);
    }
  }
  std::vector<std::pair<std::uint64_t, const std::vector<std::int64_t>*>> ordered;
  ordered.reserve(merged.size());
  for (const auto& [key, seq] : merged) ordered.emplace_back(seq, &key);
  std::sort(ordered.begin(), ordered.end());

  for (const auto& [seq, key] : ordered) {
    for (int sign : {1, -1}) {
      if (!trace_holds(*key, m, sign, all)) continue;
      HyperplaneCandidate hz = to_candidate(*key, m, sign);
      if (!check_admissible(hz, m)) continue;
      auto p = find_point(hz, m, opts.seed + seq, opts.trials);
      if (!p) continue;
      fs.nontrivial.push_back({std::move(hz), std::move(*p), true});
    }
  }
  return fs;
}

// ---------------------------------------------------------------------------
// Redundancy removal

namespace {

// H . r >= z on P(m), rewritten over y = (r_{X,i})_{i<m} as a . y >= b.
void to_reduced(const HyperplaneCandidate& hz, int m, std::vector<mpq_class>& a, mpq_class& b) {
  a.clear();
  b = mpq_class(hz.z);
  for (int x = 0; x < 3; ++x) {
    const auto& comp = hz.H[static_cast<std::size_t>(x)];
    const Integer& last = comp[static_cast<std::size_t>(m - 1)];
    for (int i = 0; i + 1 < m; ++i) a.emplace_back(comp[static_cast<std::size_t>(i)] - last);
    b -= last;
  }
}

}  // namespace

FacetSystem reduce_irredundant(const FacetSystem& fs) {
  const int m = fs.m;
  FacetSystem out;
  out.m = m;
  out.chamber = fs.chamber;

  // Primitive normals make (H, z) and (2H, 2z) coincide.
  std::vector<RessayreElement> items;
  for (const auto& e : fs.nontrivial) {
    RessayreElement copy = e;
    Integer g = copy.hz.z;
    for (const auto& comp : copy.hz.H) {
      for (const auto& x : comp) g = gcd(g, x);
    }
    if (g > 1) {
      for (auto& comp : copy.hz.H) {
        for (auto& x : comp) x /= g;
      }
      copy.hz.z /= g;
    }
    copy.primitive = true;
    if (std::none_of(items.begin(), items.end(), [&](const auto& o) { return o.hz == copy.hz; })) {
      items.push_back(std::move(copy));
    }
  }
  if (m < 2) {
    out.nontrivial = std::move(items);
    return out;
  }

  std::vector<bool> kept(items.size(), true);
  for (std::size_t i = 0; i < items.size(); ++i) {
    detail::LinearProgram lp;
    auto add = [&](const HyperplaneCandidate& hz) {
      std::vector<mpq_class> a;
      mpq_class b;
      to_reduced(hz, m, a, b);
      lp.a.push_back(std::move(a));
      lp.b.push_back(std::move(b));
    };
    for (const auto& hz : out.chamber) add(hz);
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (j != i && kept[j]) add(items[j].hz);
    }
    mpq_class target;
    to_reduced(items[i].hz, m, lp.c, target);
    const auto res = detail::solve_lp(lp);
    if (res.status != detail::LpStatus::Optimal) {
      throw std::logic_error("redundancy LP over the chamber must have an optimum");
    }
    // Redundant unless some feasible point violates a . y >= target.
    kept[i] = res.solution->value < target;
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (kept[i]) out.nontrivial.push_back(std::move(items[i]));
  }
  return out;
}

double slack(const HyperplaneCandidate& hz, const std::array<std::vector<double>, 3>& r) {
  double total = -hz.z.get_d();
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t i = 0; i < r[x].size(); ++i) total += hz.H[x][i].get_d() * r[x][i];
  }
  return total;
}

Integer scaled_slack(const HyperplaneCandidate& hz, const KronInstance& inst) {
  return pair_with_instance(hz, inst) - Integer(inst.k()) * hz.z;
}

// ---------------------------------------------------------------------------
// Floating-point marginals shared by sampling and witness search

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using cplx = std::complex<double>;

// Row-major tensor of shape dims[0] x dims[1] x dims[2].
struct Tensor3 {
  std::array<int, 3> dims;
  Eigen::Index at(int a, int b, int c) const {
    return (static_cast<Eigen::Index>(a) * dims[1] + b) * dims[2] + c;
  }
  // Flat index with slot x set to v and the other two slots to o1, o2.
  Eigen::Index slot(int x, int v, int o1, int o2) const {
    switch (x) {
      case 0: return at(v, o1, o2);
      case 1: return at(o1, v, o2);
      default: return at(o1, o2, v);
    }
  }
  // Extents of the two slots other than x.
  std::pair<int, int> others(int x) const {
    switch (x) {
      case 0: return {dims[1], dims[2]};
      case 1: return {dims[0], dims[2]};
      default: return {dims[0], dims[1]};
    }
  }
  Eigen::Index size() const { return static_cast<Eigen::Index>(dims[0]) * dims[1] * dims[2]; }
};

std::array<MatrixXcd, 3> float_marginals(const VectorXcd& psi, const Tensor3& t) {
  std::array<MatrixXcd, 3> rho;
  for (int x = 0; x < 3; ++x) {
    const int d = t.dims[static_cast<std::size_t>(x)];
    const auto [n1, n2] = t.others(x);
    MatrixXcd r = MatrixXcd::Zero(d, d);
    for (int a = 0; a < d; ++a) {
      for (int ap = 0; ap < d; ++ap) {
        cplx sum = 0;
        for (int o1 = 0; o1 < n1; ++o1) {
          for (int o2 = 0; o2 < n2; ++o2) sum += psi(t.slot(x, a, o1, o2)) * std::conj(psi(t.slot(x, ap, o1, o2)));
        }
        r(a, ap) = sum;
      }
    }
    const double tr = r.trace().real();
    rho[static_cast<std::size_t>(x)] = r / tr;
  }
  return rho;
}

// (M acting on tensor slot x) psi
VectorXcd apply_local(const MatrixXcd& mat, const VectorXcd& psi, const Tensor3& t, int x) {
  const int d = t.dims[static_cast<std::size_t>(x)];
  const auto [n1, n2] = t.others(x);
  VectorXcd out = VectorXcd::Zero(psi.size());
  for (int a = 0; a < d; ++a) {
    for (int o1 = 0; o1 < n1; ++o1) {
      for (int o2 = 0; o2 < n2; ++o2) {
        cplx sum = 0;
        for (int ap = 0; ap < d; ++ap) sum += mat(a, ap) * psi(t.slot(x, ap, o1, o2));
        out(t.slot(x, a, o1, o2)) = sum;
      }
    }
  }
  return out;
}

struct Eigensystem {
  std::vector<double> values;  // non-increasing
  MatrixXcd vectors;           // matching columns
};

Eigensystem descending_eigensystem(const MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(rho);
  const auto n = rho.rows();
  Eigensystem out;
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values.push_back(solver.eigenvalues()(n - 1 - i));
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

VectorXcd random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  VectorXcd psi(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    psi(i) = {re, im};
  }
  return psi;
}

}  // namespace

std::vector<SpectrumTriple> sample_spectra(int m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto dim = static_cast<std::size_t>(m) * static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  std::vector<SpectrumTriple> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto rho = float_marginals(random_state(dim, rng), Tensor3{{m, m, m}});
    SpectrumTriple spec;
    for (std::size_t x = 0; x < 3; ++x) spec[x] = sorted_spectrum(rho[x]);
    out.push_back(std::move(spec));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Witness search
//
// Any exact preimage has rho_X supported on the first height(lambda_X) basis
// vectors after alignment, so the descent runs in C^hA (x) C^hB (x) C^hC with
// strictly positive targets and the result is embedded into C^{m^3}.

namespace {

class WitnessObjective {
 public:
  explicit WitnessObjective(const KronInstance& inst) {
    for (Subsystem s : kSubsystems) {
      const auto x = static_cast<std::size_t>(s);
      const auto& rows = inst.lambda(s).rows();
      tensor_.dims[x] = static_cast<int>(rows.size());
      for (int v : rows) targets_[x].push_back(static_cast<double>(v) / inst.k());
    }
  }

  const Tensor3& tensor() const { return tensor_; }

  struct Eval {
    double value = 0;
    std::array<MatrixXcd, 3> rho;
    std::array<Eigensystem, 3> eig;
  };

  // sum_X ||spec(rho_X) - lambda_X/k||^2, which equals the minimum over
  // local unitaries of sum_X ||rho_X - U diag(lambda_X/k) U^*||_F^2.
  Eval evaluate(const VectorXcd& psi) const {
    Eval e;
    e.rho = float_marginals(psi, tensor_);
    for (std::size_t x = 0; x < 3; ++x) {
      e.eig[x] = descending_eigensystem(e.rho[x]);
      for (std::size_t i = 0; i < targets_[x].size(); ++i) {
        const double d = e.eig[x].values[i] - targets_[x][i];
        e.value += d * d;
      }
    }
    return e;
  }

  // Riemannian gradient direction on the unit sphere (up to a factor 4).
  VectorXcd gradient(const VectorXcd& psi, const Eval& e) const {
    VectorXcd g = VectorXcd::Zero(psi.size());
    for (std::size_t x = 0; x < 3; ++x) {
      const auto& u = e.eig[x].vectors;
      const Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(targets_[x].data(), static_cast<Eigen::Index>(targets_[x].size()));
      const MatrixXcd target = u * diag.cast<cplx>().asDiagonal() * u.adjoint();
      g += apply_local(e.rho[x] - target, psi, tensor_, static_cast<int>(x));
    }
    g -= psi.dot(g) * psi;
    return g;
  }

  // Rotates each factor into the eigenbasis of its marginal, ordered to match
  // lambda, rescales so the largest amplitude is exactly 1 and embeds the
  // result into C^{m^3}.
  std::vector<cplx> align(const VectorXcd& psi, const Eval& e, int m) const {
    VectorXcd out = psi;
    for (std::size_t x = 0; x < 3; ++x) out = apply_local(e.eig[x].vectors.adjoint(), out, tensor_, static_cast<int>(x));
    Eigen::Index big = 0;
    out.cwiseAbs().maxCoeff(&big);
    out /= out(big);
    out(big) = 1.0;
    const Tensor3 full{{m, m, m}};
    std::vector<cplx> amps(static_cast<std::size_t>(full.size()), cplx(0.0));
    for (int a = 0; a < tensor_.dims[0]; ++a) {
      for (int b = 0; b < tensor_.dims[1]; ++b) {
        for (int c = 0; c < tensor_.dims[2]; ++c) amps[static_cast<std::size_t>(full.at(a, b, c))] = out(tensor_.at(a, b, c));
      }
    }
    return amps;
  }

 private:
  Tensor3 tensor_{};
  std::array<std::vector<double>, 3> targets_;
};

}  // namespace

std::optional<MembershipCertificate> search_witness(const KronInstance& inst, const WitnessOptions& opts) {
  const int m = inst.m();
  const long bits = required_bits(m, inst.k());
  const double radius = std::sqrt(accept_threshold2(m, inst.k()).to_double());
  const WitnessObjective objective(inst);
  const auto dim = static_cast<std::size_t>(objective.tensor().size());

  auto certify = [&](const VectorXcd& psi, const WitnessObjective::Eval& e) -> std::optional<MembershipCertificate> {
    try {
      MembershipCertificate cert = truncate(objective.align(psi, e, m), bits);
      if (verify_membership(inst, cert).accepted()) return cert;
    } catch (const Error&) {
    }
    return std::nullopt;
  };

  for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
    std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(restart));
    VectorXcd psi = random_state(dim, rng);
    psi.normalize();
    auto e = objective.evaluate(psi);
    double target = radius * radius / 16.0;
    double step = 1.0;
    for (int it = 0; it < opts.max_iters; ++it) {
      if (e.value <= target) {
        if (auto cert = certify(psi, e)) return cert;
        target /= 16.0;  // float noise; keep polishing
      }
      const VectorXcd g = objective.gradient(psi, e);
      const double g2 = g.squaredNorm();
      if (g2 == 0.0) break;
      bool moved = false;
      while (step > 1e-14) {
        VectorXcd trial = (psi - step * g).normalized();
        auto te = objective.evaluate(trial);
        if (te.value <= e.value - 1e-4 * step * g2) {
          psi = std::move(trial);
          e = std::move(te);
          step = std::min(step * 1.5, 64.0);
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;  // stationary in floating point
    }
    if (e.value <= target * 16.0) {
      if (auto cert = certify(psi, e)) return cert;
    }
  }
  return std::nullopt;
}

}  // namespace kronkit
