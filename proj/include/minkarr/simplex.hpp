#pragma once
// Dense two-phase primal simplex for small standard-form programs:
//   minimize c^T x   subject to   A x = b,  x >= 0.
// Bland's rule throughout, so it terminates on degenerate instances.
// Intended for tiny problems (few rows, tens of columns).

#include <vector>

namespace minkarr {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double objective = 0.0;
  std::vector<double> x;
};

LpResult solve_standard_form(const std::vector<std::vector<double>>& A,
                             const std::vector<double>& b,
                             const std::vector<double>& c);

}  // namespace minkarr
