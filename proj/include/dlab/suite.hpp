#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dlab {

struct VerifyRow {
  std::string id;
  std::string module;
  std::string identity;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Built-in identity suite; `only` keeps the rows of one module.
std::vector<VerifyRow> verify_rows(const std::optional<std::string>& only = std::nullopt);
std::string format_table(const std::vector<VerifyRow>& rows);
std::string format_json(const std::vector<VerifyRow>& rows);

struct SweepRow {
  int n = 0;
  double alpha = 0.0;
  double dpoint_deficiency_proxy = 0.0;
  double exposure_margin = 0.0;
  double primal_witness_distance = 0.0;
  double dual_witness_distance = 0.0;
};

inline constexpr int kMaxSweepDim = 16;

/// Rows ordered by (n, alpha) for the renormed l2 construction at e1. Throws kSizeLimit past kMaxSweepDim.
std::vector<SweepRow> sweep_renorm_l2(int n_lo, int n_hi, const std::vector<double>& alphas);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace dlab
