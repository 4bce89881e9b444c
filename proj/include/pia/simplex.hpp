#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace pia {

/// coefficients . v <= rhs
struct LpConstraint {
  std::vector<double> coefficients;
  double rhs = 0.0;

  friend bool operator==(const LpConstraint&, const LpConstraint&) = default;
};

/// maximize objective . v  subject to every constraint and v >= 0.
struct LpProblem {
  std::vector<double> objective;
  std::vector<LpConstraint> constraints;

  std::size_t variable_count() const { return objective.size(); }

  friend bool operator==(const LpProblem&, const LpProblem&) = default;
};

/// Throws Error(InvalidInput) on empty objective, ragged rows or non-finite
/// coefficients.
void validate(const LpProblem& problem);

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> variables;
  double objective = 0.0;
  std::size_t pivots = 0;
};

inline constexpr double kLpTolerance = 1e-9;
inline constexpr double kMinPivot = 1e-11;

/// Called after every pivot with the phase (1 or 2) and that phase's
/// current objective value.
using PivotTrace = std::function<void(int phase, double objective)>;

/// Dense two-phase primal simplex. Phase 1 runs only when some rhs is
/// negative. Pricing is largest-coefficient, switching to Bland's rule after
/// 2 * (rows + columns) pivots. Throws Error(NumericalBreakdown) when every
/// improving column only offers pivots smaller than kMinPivot.
LpSolution solve_lp(const LpProblem& problem, const PivotTrace& trace = {});

/// Brute-force reference solver: intersects every choice of
/// variable_count hyperplanes (constraints plus nonnegativity planes), keeps
/// the best feasible vertex, and probes extreme rays of the recession cone
/// for unboundedness. Limited to 8 constraints and 4 variables.
LpSolution enumerate_vertices_oracle(const LpProblem& problem);

}  // namespace pia
