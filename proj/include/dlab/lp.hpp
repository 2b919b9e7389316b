#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace dlab::lp {

inline constexpr std::size_t kMaxVariables = 64;
inline constexpr std::size_t kMaxConstraints = 4096;

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

/// Absent bounds mean the variable is unbounded on that side.
struct Bounds {
  std::optional<double> lower;
  std::optional<double> upper;

  static Bounds nonnegative() { return {0.0, std::nullopt}; }
  static Bounds free() { return {}; }
};

/// maximize objective . x subject to the constraints and per-variable bounds.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<Constraint> constraints;
  /// Either empty (every variable free) or one entry per variable.
  std::vector<Bounds> bounds;

  explicit LinearProgram(std::vector<double> objective_coefficients = {})
      : objective(std::move(objective_coefficients)) {}

  std::size_t num_variables() const { return objective.size(); }

  LinearProgram& add(std::vector<double> row, Relation relation, double rhs) {
    constraints.push_back({std::move(row), relation, rhs});
    return *this;
  }
  LinearProgram& all_nonnegative() {
    bounds.assign(objective.size(), Bounds::nonnegative());
    return *this;
  }
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

const char* to_string(Status status);

struct Solution {
  Status status = Status::kInfeasible;
  double value = 0.0;
  std::vector<double> point;
  std::size_t iterations = 0;
};

/// Two-phase dense tableau simplex. Deterministic: largest-coefficient
/// pricing for a fixed budget, then Bland's rule until termination.
/// Throws Error(kSizeLimit) past the desk-scale caps and Error(kNumerical)
/// if the pivot budget runs out or the final point fails verification.
Solution solve(const LinearProgram& program);

}  // namespace dlab::lp
