#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dlab/diag.hpp"
#include "dlab/error.hpp"
#include "dlab/io.hpp"
#include "dlab/norm.hpp"
#include "dlab/suite.hpp"

namespace {

constexpr int kExitFails = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitLowerBound = 4;
constexpr int kExitOther = 5;

dlab::SpacePtr load_space(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return dlab::parse_space(arg);
  std::ifstream in(arg);
  if (!in) throw dlab::Error(dlab::ErrorCode::kParse, "cannot read space file " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return dlab::parse_space(buf.str());
}

std::pair<int, int> parse_dims(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw dlab::Error(dlab::ErrorCode::kParse, "dims must look like 2..12, got " + text);
  }
}

int exit_code(dlab::ErrorCode code) {
  switch (code) {
    case dlab::ErrorCode::kParse:
    case dlab::ErrorCode::kInvalidDescriptor:
      return kExitParse;
    case dlab::ErrorCode::kOutOfDimension:
      return kExitDimension;
    default:
      return kExitOther;
  }
}

void print_value(double v) { std::printf("%.12f\n", v); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renormings, sums, tensor norms and diametral-point diagnostics on finite-dimensional balls"};
  app.require_subcommand(1);

  std::string space_arg;
  std::string vector_arg;

  auto* norm_cmd = app.add_subcommand("norm", "Evaluate the norm of a vector");
  norm_cmd->add_option("space", space_arg, "Space JSON file or inline JSON")->required();
  norm_cmd->add_option("--vector", vector_arg, "Dense \"1,0,2\" or sparse {\"1\":1,\"3\":2}")->required();

  std::string check;
  std::string point_arg;
  double alpha = 0.1;
  double eps = dlab::kDefaultEps;
  auto* diag_cmd = app.add_subcommand("diag", "Run a diametral diagnostic and print the report as JSON");
  diag_cmd->add_option("space", space_arg, "Space JSON file or inline JSON")->required();
  diag_cmd->add_option("--check", check, "nabla | dpoint | daugavet | exposed")
      ->required()
      ->check(CLI::IsMember({"nabla", "dpoint", "daugavet", "exposed"}));
  diag_cmd->add_option("--point", point_arg, "Unit vector to test")->required();
  diag_cmd->add_option("--alpha", alpha, "Slice depth")->capture_default_str();
  diag_cmd->add_option("--eps", eps, "Distance slack for nabla")->capture_default_str();

  std::optional<std::string> only;
  bool as_json = false;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the built-in identity suite");
  verify_cmd->add_option("--only", only, "Restrict to one module");
  verify_cmd->add_flag("--json", as_json, "Machine-readable output");

  std::string construction;
  std::string dims = "2..12";
  std::vector<double> alphas(dlab::kAlphaGrid.begin(), dlab::kAlphaGrid.end());
  auto* sweep_cmd = app.add_subcommand("sweep", "Deficiency and witness curves as CSV");
  sweep_cmd->add_option("--construction", construction, "Construction to sweep")
      ->required()
      ->check(CLI::IsMember({"renorm-l2"}));
  sweep_cmd->add_option("--dims", dims, "Dimension range lo..hi")->capture_default_str();
  sweep_cmd->add_option("--alpha", alphas, "Slice depths")->delimiter(',');

  auto* oracle_cmd = app.add_subcommand("oracle", "Independent oracles");
  oracle_cmd->require_subcommand(1);
  auto* gauge_cmd = oracle_cmd->add_subcommand("gauge", "Gauge LP on the vertex model of a polyhedral space");
  gauge_cmd->add_option("space", space_arg, "Space JSON file or inline JSON")->required();
  gauge_cmd->add_option("--vector", vector_arg, "Vector to measure")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*norm_cmd) {
      const auto space = load_space(space_arg);
      print_value(dlab::norm(*space, dlab::parse_vector(vector_arg)));
      return 0;
    }
    if (*gauge_cmd) {
      const auto space = load_space(space_arg);
      const auto x = dlab::parse_vector(vector_arg);
      dlab::check_support(*space, x);
      print_value(dlab::to_vball(*space)->gauge(x));
      return 0;
    }
    if (*diag_cmd) {
      const auto space = load_space(space_arg);
      const auto x = dlab::parse_vector(point_arg);
      dlab::check_support(*space, x);
      dlab::DiagnosticReport report;
      if (check == "nabla") {
        report = dlab::nabla_check(*space, x, eps);
      } else if (check == "dpoint") {
        report = dlab::dpoint_deficiency(*space, x, alpha);
      } else if (check == "daugavet") {
        report = dlab::daugavet_check(*space, x, alpha, eps);
      } else {
        report = dlab::strongly_exposed_check(*space, x);
      }
      std::cout << dlab::report_to_json(report).dump(2) << "\n";
      switch (report.verdict) {
        case dlab::Verdict::kHolds: return 0;
        case dlab::Verdict::kFails: return kExitFails;
        case dlab::Verdict::kLowerBoundOnly: return kExitLowerBound;
      }
    }
    if (*verify_cmd) {
      const auto rows = dlab::verify_rows(only);
      std::cout << (as_json ? dlab::format_json(rows) : dlab::format_table(rows));
      for (const auto& r : rows) {
        if (!r.pass) return kExitFails;
      }
      return 0;
    }
    if (*sweep_cmd) {
      const auto [lo, hi] = parse_dims(dims);
      std::cout << dlab::sweep_csv(dlab::sweep_renorm_l2(lo, hi, alphas));
      return 0;
    }
  } catch (const dlab::Error& e) {
    std::cerr << "dlab: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "dlab: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOther;
}
