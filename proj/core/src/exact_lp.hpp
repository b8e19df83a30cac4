#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace kronkit::detail {

/// minimize c.y  subject to  A y >= b,  y >= 0, over Q.
struct LinearProgram {
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  std::vector<mpq_class> c;
};

struct LpSolution {
  mpq_class value;
  std::vector<mpq_class> point;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<LpSolution> solution;
};

/// Two-phase dense tableau simplex with Bland's rule. Exact.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace kronkit::detail
