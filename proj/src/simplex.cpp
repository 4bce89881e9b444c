#include "pia/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "pia/error.hpp"

namespace pia {

void validate(const LpProblem& problem) {
  const std::size_t n = problem.variable_count();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "LP has no variables");
  for (double c : problem.objective) {
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidInput, "non-finite objective coefficient");
  }
  for (const auto& row : problem.constraints) {
    if (row.coefficients.size() != n) {
      throw Error(ErrorCode::InvalidInput, "constraint row length differs from variable count");
    }
    if (!std::isfinite(row.rhs)) throw Error(ErrorCode::InvalidInput, "non-finite rhs");
    for (double a : row.coefficients) {
      if (!std::isfinite(a)) throw Error(ErrorCode::InvalidInput, "non-finite constraint coefficient");
    }
  }
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "Unknown";
}

namespace {

// Columns: structural [0, n), slack [n, n + m), artificial [n + m, cols).
class Tableau {
 public:
  explicit Tableau(const LpProblem& p)
      : n_(p.variable_count()), m_(p.constraints.size()) {
    std::size_t artificial = 0;
    for (const auto& row : p.constraints) artificial += row.rhs < 0.0 ? 1 : 0;
    cols_ = n_ + m_ + artificial;
    cells_.assign(m_ * (cols_ + 1), 0.0);
    basis_.resize(m_);
    reduced_.assign(cols_ + 1, 0.0);
    blocked_.assign(cols_, false);

    std::size_t next_artificial = n_ + m_;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& row = p.constraints[i];
      const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign * row.coefficients[j];
      at(i, n_ + i) = sign;
      rhs(i) = sign * row.rhs;
      if (row.rhs < 0.0) {
        at(i, next_artificial) = 1.0;
        basis_[i] = next_artificial++;
      } else {
        basis_[i] = n_ + i;
      }
    }
  }

  bool has_artificials() const { return cols_ > n_ + m_; }
  bool is_artificial(std::size_t j) const { return j >= n_ + m_; }

  // Loads a cost vector (maximize) and prices out the current basis.
  void set_objective(const std::vector<double>& cost) {
    std::fill(reduced_.begin(), reduced_.end(), 0.0);
    std::copy(cost.begin(), cost.end(), reduced_.begin());
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = reduced_[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) reduced_[j] -= cb * at(i, j);
    }
  }

  double objective_value() const { return -reduced_[cols_]; }

  // Runs pivots until optimal. Returns false if unbounded.
  bool optimize(int phase, std::size_t& pivots, const PivotTrace& trace) {
    const std::size_t bland_after = 2 * (m_ + cols_);
    std::size_t phase_pivots = 0;
    for (;;) {
      const bool bland = phase_pivots >= bland_after;
      std::vector<std::size_t> candidates;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!blocked_[j] && reduced_[j] > kLpTolerance) candidates.push_back(j);
      }
      if (candidates.empty()) return true;
      if (!bland) {
        // Largest reduced cost first, lowest index on ties.
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](std::size_t a, std::size_t b) { return reduced_[a] > reduced_[b]; });
      }

      std::optional<std::pair<std::size_t, std::size_t>> choice;
      for (std::size_t col : candidates) {
        const auto row = ratio_test(col);
        if (row) {
          choice = {*row, col};
          break;
        }
        // Only sub-threshold positive entries: try the next column.
        if (column_has_positive(col)) continue;
        return false;
      }
      if (!choice) {
        throw Error(ErrorCode::NumericalBreakdown, "no pivot element above minimum magnitude");
      }
      pivot(choice->first, choice->second);
      ++pivots;
      ++phase_pivots;
      if (trace) trace(phase, objective_value());
    }
  }

  // Pivots basic artificials out after phase 1 where possible; rows that
  // cannot be cleared are redundant and keep their zero-valued artificial.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      std::size_t best = cols_;
      double best_mag = kMinPivot;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (std::abs(at(i, j)) > best_mag) {
          best_mag = std::abs(at(i, j));
          best = j;
        }
      }
      if (best != cols_) pivot(i, best);
    }
    for (std::size_t j = n_ + m_; j < cols_; ++j) blocked_[j] = true;
  }

  std::vector<double> structural_values() const {
    std::vector<double> v(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) v[basis_[i]] = rhs(i);
    }
    return v;
  }

  std::size_t columns() const { return cols_; }

 private:
  double& at(std::size_t i, std::size_t j) { return cells_[i * (cols_ + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return cells_[i * (cols_ + 1) + j]; }
  double& rhs(std::size_t i) { return at(i, cols_); }
  double rhs(std::size_t i) const { return at(i, cols_); }

  bool column_has_positive(std::size_t col) const {
    for (std::size_t i = 0; i < m_; ++i) {
      if (at(i, col) > 0.0) return true;
    }
    return false;
  }

  // Minimum-ratio row; ties go to the lowest basic variable index.
  std::optional<std::size_t> ratio_test(std::size_t col) const {
    std::optional<std::size_t> best;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m_; ++i) {
      const double a = at(i, col);
      if (a <= kMinPivot) continue;
      const double ratio = std::max(rhs(i), 0.0) / a;
      if (!best || ratio < best_ratio - 1e-12) {
        best = i;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + 1e-12 && basis_[i] < basis_[*best]) {
        best = i;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const double inv = 1.0 / at(row, col);
    for (std::size_t j = 0; j <= cols_; ++j) at(row, j) *= inv;
    at(row, col) = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(row, j);
      at(i, col) = 0.0;
    }
    const double f = reduced_[col];
    if (f != 0.0) {
      for (std::size_t j = 0; j <= cols_; ++j) reduced_[j] -= f * at(row, j);
      reduced_[col] = 0.0;
    }
    basis_[row] = col;
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t cols_ = 0;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
  std::vector<double> reduced_;
  std::vector<bool> blocked_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem, const PivotTrace& trace) {
  validate(problem);
  Tableau tableau(problem);
  LpSolution solution;
  const std::size_t n = problem.variable_count();

  if (tableau.has_artificials()) {
    std::vector<double> phase_one(tableau.columns(), 0.0);
    for (std::size_t j = 0; j < tableau.columns(); ++j) {
      if (tableau.is_artificial(j)) phase_one[j] = -1.0;
    }
    tableau.set_objective(phase_one);
    // Phase 1 is bounded above by zero.
    tableau.optimize(1, solution.pivots, trace);
    if (tableau.objective_value() < -kLpTolerance) {
      solution.status = LpStatus::Infeasible;
      solution.variables.assign(n, 0.0);
      return solution;
    }
    tableau.expel_artificials();
  }

  tableau.set_objective(problem.objective);
  const bool bounded = tableau.optimize(2, solution.pivots, trace);
  solution.variables = tableau.structural_values();
  solution.status = bounded ? LpStatus::Optimal : LpStatus::Unbounded;
  solution.objective = bounded ? dot(problem.objective, solution.variables)
                               : std::numeric_limits<double>::infinity();
  return solution;
}

namespace {

// Gaussian elimination with partial pivoting on a dense square system.
std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a,
                                                std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (std::abs(a[p][c]) < 1e-12) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return x;
}

// Hyperplane h of the combined list: constraint rows first, then -v_j <= 0.
struct Hyperplanes {
  const LpProblem& p;

  std::size_t count() const { return p.constraints.size() + p.variable_count(); }

  std::vector<double> normal(std::size_t h) const {
    if (h < p.constraints.size()) return p.constraints[h].coefficients;
    std::vector<double> e(p.variable_count(), 0.0);
    e[h - p.constraints.size()] = -1.0;
    return e;
  }

  double offset(std::size_t h) const { return h < p.constraints.size() ? p.constraints[h].rhs : 0.0; }
};

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

LpSolution enumerate_vertices_oracle(const LpProblem& problem) {
  validate(problem);
  const std::size_t n = problem.variable_count();
  if (n > 4 || problem.constraints.size() > 8) {
    throw Error(ErrorCode::InvalidInput, "vertex enumeration limited to 4 variables, 8 constraints");
  }
  const Hyperplanes planes{problem};
  constexpr double kFeasible = 1e-9;

  LpSolution best;
  best.status = LpStatus::Infeasible;
  best.variables.assign(n, 0.0);
  bool found = false;

  for_each_subset(planes.count(), n, [&](const std::vector<std::size_t>& subset) {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t h : subset) {
      a.push_back(planes.normal(h));
      b.push_back(planes.offset(h));
    }
    const auto v = solve_square(std::move(a), std::move(b));
    if (!v) return;
    for (std::size_t h = 0; h < planes.count(); ++h) {
      if (dot(planes.normal(h), *v) > planes.offset(h) + kFeasible) return;
    }
    const double value = dot(problem.objective, *v);
    if (!found || value > best.objective) {
      found = true;
      best.status = LpStatus::Optimal;
      best.objective = value;
      best.variables = *v;
    }
  });
  if (!found) return best;

  // Extreme rays of {d >= 0, A d <= 0}, normalized by sum(d) = 1.
  bool unbounded = false;
  for_each_subset(planes.count(), n - 1, [&](const std::vector<std::size_t>& subset) {
    if (unbounded) return;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t h : subset) {
      a.push_back(planes.normal(h));
      b.push_back(0.0);
    }
    a.emplace_back(n, 1.0);
    b.push_back(1.0);
    const auto d = solve_square(std::move(a), std::move(b));
    if (!d) return;
    for (std::size_t h = 0; h < planes.count(); ++h) {
      if (dot(planes.normal(h), *d) > kFeasible) return;
    }
    if (dot(problem.objective, *d) > kFeasible) unbounded = true;
  });
  if (unbounded) {
    best.status = LpStatus::Unbounded;
    best.objective = std::numeric_limits<double>::infinity();
  }
  return best;
}

}  // namespace pia
