#include "dlab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dlab/error.hpp"

namespace dlab::lp {

const char* to_string(Status status) {
  switch (status) {
    case Status::kOptimal: return "Optimal";
    case Status::kInfeasible: return "Infeasible";
    case Status::kUnbounded: return "Unbounded";
  }
  return "Unknown";
}

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-10;
constexpr double kPhaseOneEps = 1e-9;
constexpr double kFeasEps = 1e-9;

// x_original[j] = offset[j] + sum over terms of coef * x_standard[col]
struct VariableMap {
  double offset = 0.0;
  std::vector<std::pair<std::size_t, double>> terms;
};

struct StandardRow {
  std::vector<double> a;  // over standard columns
  bool greater = false;   // after rhs normalization: true => >=, false => <=
  double rhs = 0.0;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double& cost(std::size_t c) { return at(rows_, c); }
  double objective_value() const { return at(rows_, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) /= p;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double factor = at(r, pc);
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= factor * at(pr, c);
      at(r, pc) = 0.0;
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

enum class RunResult { kOptimal, kUnbounded };

class Simplex {
 public:
  Simplex(Tableau& t, std::vector<std::size_t>& basis, std::vector<bool> enterable)
      : t_(t), basis_(basis), enterable_(std::move(enterable)) {}

  RunResult run(std::size_t& iterations) {
    const std::size_t budget = 20 * (t_.rows() + t_.cols()) + 100;
    const std::size_t hard_cap = budget + 200 * (t_.rows() + t_.cols()) + 10000;
    std::size_t local = 0;
    while (true) {
      const bool bland = local >= budget;
      const auto entering = choose_entering(bland);
      if (!entering) return RunResult::kOptimal;
      const auto leaving = choose_leaving(*entering, bland);
      if (!leaving) return RunResult::kUnbounded;
      t_.pivot(*leaving, *entering);
      basis_[*leaving] = *entering;
      for (std::size_t r = 0; r < t_.rows(); ++r) t_.rhs(r) = std::max(t_.rhs(r), 0.0);
      ++local;
      ++iterations;
      if (local > hard_cap) {
        throw Error(ErrorCode::kNumerical, "simplex pivot budget exhausted");
      }
    }
  }

 private:
  std::optional<std::size_t> choose_entering(bool bland) {
    std::optional<std::size_t> best;
    double best_cost = -kCostEps;
    for (std::size_t c = 0; c < t_.cols(); ++c) {
      if (!enterable_[c]) continue;
      const double rc = t_.cost(c);
      if (rc < -kCostEps) {
        if (bland) return c;
        if (rc < best_cost) {
          best_cost = rc;
          best = c;
        }
      }
    }
    return best;
  }

  // Harris two-pass ratio test: relax the bound by kFeasEps, then take the largest pivot under it.
  // Under Bland's rule, the plain minimum ratio with the smallest basic index.
  std::optional<std::size_t> choose_leaving(std::size_t col, bool bland) {
    std::optional<std::size_t> best;
    if (bland) {
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < t_.rows(); ++r) {
        const double a = t_.at(r, col);
        if (a <= kPivotEps) continue;
        const double ratio = std::max(t_.rhs(r), 0.0) / a;
        if (!best || ratio < best_ratio - 1e-12 ||
            (ratio <= best_ratio + 1e-12 && basis_[r] < basis_[*best])) {
          best = r;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
      return best;
    }
    double bound = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t_.rows(); ++r) {
      const double a = t_.at(r, col);
      if (a > kPivotEps) bound = std::min(bound, (std::max(t_.rhs(r), 0.0) + kFeasEps) / a);
    }
    double best_a = 0.0;
    for (std::size_t r = 0; r < t_.rows(); ++r) {
      const double a = t_.at(r, col);
      if (a <= kPivotEps || std::max(t_.rhs(r), 0.0) / a > bound) continue;
      if (a > best_a) {
        best_a = a;
        best = r;
      }
    }
    return best;
  }

  Tableau& t_;
  std::vector<std::size_t>& basis_;
  std::vector<bool> enterable_;
};

void check_shape(const LinearProgram& program) {
  const std::size_t n = program.num_variables();
  if (n == 0) throw Error(ErrorCode::kInvalidDescriptor, "linear program has no variables");
  if (n > kMaxVariables) {
    throw Error(ErrorCode::kSizeLimit, std::to_string(n) + " variables exceeds cap " + std::to_string(kMaxVariables));
  }
  if (program.constraints.size() > kMaxConstraints) {
    throw Error(ErrorCode::kSizeLimit, std::to_string(program.constraints.size()) + " constraints exceeds cap " +
                                           std::to_string(kMaxConstraints));
  }
  if (!program.bounds.empty() && program.bounds.size() != n) {
    throw Error(ErrorCode::kInvalidDescriptor, "bounds list length does not match variable count");
  }
  for (const auto& c : program.constraints) {
    if (c.coefficients.size() != n) {
      throw Error(ErrorCode::kInvalidDescriptor, "constraint row length does not match variable count");
    }
    if (!std::isfinite(c.rhs)) throw Error(ErrorCode::kInvalidDescriptor, "constraint rhs must be finite");
  }
}

bool verify(const LinearProgram& program, const std::vector<double>& x) {
  for (const auto& c : program.constraints) {
    double lhs = 0.0;
    double scale = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      lhs += c.coefficients[j] * x[j];
      scale = std::max(scale, std::abs(c.coefficients[j] * x[j]));
    }
    const double slack = 1e-7 * scale;
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs + slack) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs - slack) return false;
        break;
      case Relation::kEqual:
        if (std::abs(lhs - c.rhs) > slack) return false;
        break;
    }
  }
  return true;
}

}  // namespace

Solution solve(const LinearProgram& program) {
  check_shape(program);
  const std::size_t n = program.num_variables();

  // Map original variables onto nonnegative standard columns.
  std::vector<VariableMap> maps(n);
  std::size_t std_cols = 0;
  std::vector<std::pair<std::size_t, double>> upper_rows;  // (column, width)
  for (std::size_t j = 0; j < n; ++j) {
    const Bounds b = program.bounds.empty() ? Bounds::free() : program.bounds[j];
    if (b.lower && b.upper && *b.lower > *b.upper) {
      Solution s;
      s.status = Status::kInfeasible;
      return s;
    }
    if (b.lower) {
      maps[j].offset = *b.lower;
      if (b.upper) upper_rows.push_back({std_cols, *b.upper - *b.lower});
      maps[j].terms.push_back({std_cols++, 1.0});
    } else if (b.upper) {
      maps[j].offset = *b.upper;
      maps[j].terms.push_back({std_cols++, -1.0});
    } else {
      maps[j].terms.push_back({std_cols++, 1.0});
      maps[j].terms.push_back({std_cols++, -1.0});
    }
  }
  std::vector<StandardRow> rows;
  for (const auto& [col, width] : upper_rows) {
    StandardRow r;
    r.a.assign(std_cols, 0.0);
    r.a[col] = 1.0;
    r.rhs = width;
    rows.push_back(std::move(r));
  }

  auto push_row = [&](const std::vector<double>& coeffs, bool greater, double rhs) {
    StandardRow r;
    r.a.assign(std_cols, 0.0);
    double shifted = rhs;
    for (std::size_t j = 0; j < n; ++j) {
      shifted -= coeffs[j] * maps[j].offset;
      for (const auto& [col, coef] : maps[j].terms) r.a[col] += coeffs[j] * coef;
    }
    r.greater = greater;
    r.rhs = shifted;
    rows.push_back(std::move(r));
  };
  for (const auto& c : program.constraints) {
    switch (c.relation) {
      case Relation::kLessEqual: push_row(c.coefficients, false, c.rhs); break;
      case Relation::kGreaterEqual: push_row(c.coefficients, true, c.rhs); break;
      case Relation::kEqual:
        push_row(c.coefficients, false, c.rhs);
        push_row(c.coefficients, true, c.rhs);
        break;
    }
  }
  for (auto& r : rows) {
    if (r.rhs < 0.0) {
      for (auto& v : r.a) v = -v;
      r.rhs = -r.rhs;
      r.greater = !r.greater;
    }
  }

  const std::size_t m = rows.size();
  std::size_t artificial_count = 0;
  for (const auto& r : rows) artificial_count += r.greater ? 1 : 0;
  // columns: [standard | one slack/surplus per row | artificials]
  const std::size_t slack_base = std_cols;
  const std::size_t art_base = std_cols + m;
  const std::size_t total_cols = art_base + artificial_count;

  Tableau t(m, total_cols);
  std::vector<std::size_t> basis(m);
  std::vector<bool> is_artificial(total_cols, false);
  std::size_t next_art = art_base;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < std_cols; ++c) t.at(i, c) = rows[i].a[c];
    t.rhs(i) = rows[i].rhs;
    if (rows[i].greater) {
      t.at(i, slack_base + i) = -1.0;
      t.at(i, next_art) = 1.0;
      is_artificial[next_art] = true;
      basis[i] = next_art++;
    } else {
      t.at(i, slack_base + i) = 1.0;
      basis[i] = slack_base + i;
    }
  }

  Solution solution;
  // Phase 1: maximize -sum(artificials).
  if (artificial_count > 0) {
    for (std::size_t c = art_base; c < total_cols; ++c) t.cost(c) = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_artificial[basis[i]]) continue;
      for (std::size_t c = 0; c <= total_cols; ++c) t.at(m, c) -= t.at(i, c);
    }
    std::vector<bool> enterable(total_cols, true);
    Simplex(t, basis, enterable).run(solution.iterations);
    if (t.objective_value() < -kPhaseOneEps) {
      solution.status = Status::kInfeasible;
      return solution;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_artificial[basis[i]]) continue;
      std::optional<std::size_t> best;
      double best_abs = kPivotEps;
      for (std::size_t c = 0; c < art_base; ++c) {
        if (std::abs(t.at(i, c)) > best_abs) {
          best_abs = std::abs(t.at(i, c));
          best = c;
        }
      }
      if (best) {
        t.pivot(i, *best);
        basis[i] = *best;
      }
    }
  }

  // Phase 2: original objective over standard columns.
  for (std::size_t c = 0; c <= total_cols; ++c) t.cost(c) = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [col, coef] : maps[j].terms) t.cost(col) -= program.objective[j] * coef;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const double factor = t.cost(basis[i]);
    if (factor == 0.0) continue;
    for (std::size_t c = 0; c <= total_cols; ++c) t.at(m, c) -= factor * t.at(i, c);
  }
  std::vector<bool> enterable(total_cols, true);
  for (std::size_t c = art_base; c < total_cols; ++c) enterable[c] = false;
  if (Simplex(t, basis, enterable).run(solution.iterations) == RunResult::kUnbounded) {
    solution.status = Status::kUnbounded;
    return solution;
  }

  std::vector<double> standard(total_cols, 0.0);
  for (std::size_t i = 0; i < m; ++i) standard[basis[i]] = t.rhs(i);
  solution.point.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double v = maps[j].offset;
    for (const auto& [col, coef] : maps[j].terms) v += coef * standard[col];
    solution.point[j] = v;
  }
  solution.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) solution.value += program.objective[j] * solution.point[j];
  if (!verify(program, solution.point)) {
    throw Error(ErrorCode::kNumerical, "simplex returned a point violating its constraints");
  }
  solution.status = Status::kOptimal;
  return solution;
}

}  // namespace dlab::lp
