#include "exact_lp.hpp"

#include <cstddef>

namespace kronkit::detail {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows, std::vector<mpq_class>(cols + 1)), z_(cols + 1), basis_(rows) {}

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return z_.size() - 1; }
  mpq_class& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  mpq_class& rhs(std::size_t r) { return t_[r].back(); }
  std::vector<mpq_class>& zrow() { return z_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t col) {
    auto& prow = t_[r];
    const mpq_class p = prow[col];
    for (auto& x : prow) x /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || sgn(t_[i][col]) == 0) continue;
      const mpq_class f = t_[i][col];
      for (std::size_t j = 0; j < prow.size(); ++j) {
        if (sgn(prow[j]) != 0) t_[i][j] -= f * prow[j];
      }
    }
    if (sgn(z_[col]) != 0) {
      const mpq_class f = z_[col];
      for (std::size_t j = 0; j < prow.size(); ++j) {
        if (sgn(prow[j]) != 0) z_[j] -= f * prow[j];
      }
    }
    basis_[r] = col;
  }

  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool optimize(std::size_t limit) {
    for (;;) {
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(z_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == limit) return true;
      std::size_t leaving = rows();
      mpq_class best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(t_[i][entering]) <= 0) continue;
        mpq_class ratio = t_[i].back() / t_[i][entering];
        if (leaving == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == rows()) return false;
      pivot(leaving, entering);
    }
  }

  void erase_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<mpq_class>> t_;
  std::vector<mpq_class> z_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  // Columns: y (n), surplus (m), artificial (m).
  const std::size_t art0 = n + m;
  Tableau tab(m, n + 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sigma = sgn(lp.b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = sigma * lp.a[i][j];
    tab.at(i, n + i) = -sigma;
    tab.at(i, art0 + i) = 1;
    tab.rhs(i) = sigma * lp.b[i];
    tab.basis()[i] = art0 + i;
  }

  // Phase 1: minimize the sum of artificials.
  auto& z = tab.zrow();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < art0; ++j) z[j] -= tab.at(i, j);
    z.back() -= tab.rhs(i);
  }
  tab.optimize(art0 + m);
  if (sgn(z.back()) != 0) return {LpStatus::Infeasible, std::nullopt};

  // Drive artificials out of the basis; rows that cannot pivot are redundant.
  for (std::size_t i = tab.rows(); i-- > 0;) {
    if (tab.basis()[i] < art0) continue;
    std::size_t col = art0;
    for (std::size_t j = 0; j < art0; ++j) {
      if (sgn(tab.at(i, j)) != 0) {
        col = j;
        break;
      }
    }
    if (col == art0) {
      tab.erase_row(i);
    } else {
      tab.pivot(i, col);
    }
  }

  // Phase 2 objective in terms of the current basis.
  for (auto& x : z) x = 0;
  for (std::size_t j = 0; j < n; ++j) z[j] = lp.c[j];
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    const std::size_t bcol = tab.basis()[i];
    if (bcol >= n || sgn(lp.c[bcol]) == 0) continue;
    const mpq_class cb = lp.c[bcol];
    for (std::size_t j = 0; j < art0; ++j) z[j] -= cb * tab.at(i, j);
    z.back() -= cb * tab.rhs(i);
  }
  if (!tab.optimize(art0)) return {LpStatus::Unbounded, std::nullopt};

  LpSolution sol;
  sol.value = -z.back();
  sol.point.assign(n, mpq_class(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis()[i] < n) sol.point[tab.basis()[i]] = tab.rhs(i);
  }
  return {LpStatus::Optimal, std::move(sol)};
}

}  // namespace kronkit::detail
