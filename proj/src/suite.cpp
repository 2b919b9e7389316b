#include "dlab/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "dlab/diag.hpp"
#include "dlab/error.hpp"
#include "dlab/io.hpp"
#include "dlab/norm.hpp"
#include "dlab/renorm.hpp"
#include "dlab/sums.hpp"
#include "dlab/tensor.hpp"

namespace dlab {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string pair_text(VerdictPair p) {
  return std::string("(") + (p.lhs ? "true" : "false") + ", " + (p.rhs ? "true" : "false") + ")";
}

std::string nabla_text(const DiagnosticReport& r) {
  std::string out = to_string(r.verdict);
  if (r.verdict == Verdict::kFails && r.witness) out += " witness " + to_string(r.witness->vector);
  return out + " deficiency " + num(r.deficiency);
}

class Suite {
 public:
  explicit Suite(const std::optional<std::string>& only) : only_(only) {}

  void number(std::string id, std::string module, std::string identity, double expected,
              const std::function<double()>& compute) {
    if (skip(module)) return;
    VerifyRow row{std::move(id), std::move(module), std::move(identity), num(expected), "", false};
    try {
      const double v = compute();
      row.computed = num(v);
      row.pass = std::abs(v - expected) <= kTol;
    } catch (const std::exception& e) {
      row.computed = std::string("error: ") + e.what();
    }
    rows_.push_back(std::move(row));
  }

  void text(std::string id, std::string module, std::string identity, std::string expected,
            const std::function<std::string()>& compute) {
    if (skip(module)) return;
    VerifyRow row{std::move(id), std::move(module), std::move(identity), std::move(expected), "", false};
    try {
      row.computed = compute();
      row.pass = row.computed == row.expected;
    } catch (const std::exception& e) {
      row.computed = std::string("error: ") + e.what();
    }
    rows_.push_back(std::move(row));
  }

  std::vector<VerifyRow> take() { return std::move(rows_); }

 private:
  bool skip(const std::string& module) const { return only_ && *only_ != module; }

  const std::optional<std::string>& only_;
  std::vector<VerifyRow> rows_;
};

SparseVector e(int i, double v = 1.0) { return SparseVector::unit(i, v); }

}  // namespace

std::vector<VerifyRow> verify_rows(const std::optional<std::string>& only) {
  Suite suite(only);
  const auto one = Exponent::finite(1.0);
  const auto two = Exponent::finite(2.0);
  const auto inf = Exponent::infinity();
  const auto r4 = renormed_space(two, 4);
  const auto& rs4 = std::get<RenormedSpace>(r4->kind);
  const auto l1_2 = lp_space(one, 2);
  const auto l1_3 = lp_space(one, 3);
  const auto linf_2 = lp_space(inf, 2);
  const auto line = lp_space(one, 1);
  const auto edge_ball = [&] { return VBall::create({e(1), e(1, -1), e(1) + e(2, 2), -(e(1) + e(2, 2))}, 2); };

  suite.number("core.unit-generator", "core", "renormed l2^4 norm of e1 + 2 e2", 1.0,
               [&] { return norm(*r4, e(1) + e(2, 2)); });

  suite.number("polytope.edge-ball-gauge", "polytope", "gauge of e2 in conv{+-e1, +-(e1 + 2 e2)}", 1.0,
               [&] { return edge_ball()->gauge(e(2)); });
  suite.number("polytope.edge-ball-support", "polytope", "support of e2* on conv{+-e1, +-(e1 + 2 e2)}", 2.0,
               [&] { return edge_ball()->support(e(2)); });

  suite.number("renorm.segment", "renorm", "renormed l2 norm of 0.3 e2 - 0.7 (e1 + 2 e3)", 1.0,
               [&] { return rnorm(rs4, 0.3 * e(2) - 0.7 * (e(1) + e(3, 2))); });
  suite.number("renorm.dual-tail", "renorm", "renormed dual norm of e2*", 2.0, [&] { return rnorm_dual(rs4, e(2)); });
  suite.number("renorm.dual-corner", "renorm", "renormed dual norm of e1* - e2*", 1.0,
               [&] { return rnorm_dual(rs4, e(1) - e(2)); });
  suite.text("renorm.decompose-edge", "renorm", "dual decomposition of e1* - 0.7 e2*", "lambda 1, x* {}, y* {2: 0.7}",
             [&] {
               const auto d = decompose_dual(rs4, e(1) - e(2, 0.7));
               return "lambda " + num(d.lambda) + ", x* " + to_string(d.xstar) + ", y* " + to_string(d.ystar);
             });
  suite.text("renorm.primal-witness-e1", "renorm", "primal witness at e1 along coordinate 3", "{1: 1, 3: 2}",
             [&] { return to_string(primal_witness(rs4, e(1), 3)); });
  suite.number("renorm.primal-witness-distance", "renorm", "renormed norm of e1 - (e1 + 2 e3)", 2.0,
               [&] { return rnorm(rs4, e(1) - primal_witness(rs4, e(1), 3)); });
  suite.text("renorm.corner-l2", "renorm", "last unit vector of the corner renorming of l2^2 is a nabla point",
             "Holds", [&] {
               const auto s = corner_renorm(*lp_space(two, 2));
               return std::string(to_string(nabla_check(*s, e(2)).verdict));
             });

  suite.text("sums.l1-transfer-line", "sums", "1 in R and (1, 0) in R (+)_1 R are nabla points", "(true, true)",
             [&] { return pair_text(check_l1_transfer(line, e(1), line)); });
  suite.text("sums.l1-transfer-cube-corner", "sums", "(1, 1) in linf^2 and its l1-sum embedding are nabla points",
             "(true, true)", [&] { return pair_text(check_l1_transfer(linf_2, e(1) + e(2), line)); });
  suite.text("sums.linf-corner", "sums", "(1, 1) in R (+)_inf R against both components nabla", "(true, true)",
             [&] { return pair_text(check_linf_characterization(line, e(1), line, e(1))); });
  suite.text("sums.linf-edge", "sums", "(1, 0) in R (+)_inf R is not a nabla point", "(false, false)",
             [&] { return pair_text(check_linf_characterization(line, e(1), line, SparseVector{})); });

  suite.number("tensor.denting-distinct-left", "tensor", "||e1 (x) e1 - e2 (x) e1|| in l1^2 (x) l1^2", 2.0, [&] {
    const auto b = to_vball(*l1_2);
    return tensor_denting_distance(*b, *b, e(1), e(1), e(2), e(1));
  });
  suite.number("tensor.denting-sign-flip", "tensor", "||e1 (x) e1 - e2 (x) (-e1)|| in l1^2 (x) l1^2", 2.0, [&] {
    const auto b = to_vball(*l1_2);
    return tensor_denting_distance(*b, *b, e(1), e(1), e(2), e(1, -1));
  });
  suite.number("tensor.antipodal-pair-coincides", "tensor", "(-e1) (x) (-e1) is e1 (x) e1 itself: distance 0", 0.0,
               [&] {
                 const auto b = to_vball(*l1_2);
                 return tensor_denting_distance(*b, *b, e(1), e(1), e(1, -1), e(1, -1));
               });

  suite.text("diag.nabla-l1-vertex", "diag", "e1 is a nabla point of l1^3", "Holds deficiency 0",
             [&] { return nabla_text(nabla_check(*l1_3, e(1))); });
  suite.text("diag.nabla-l1-midpoint", "diag", "(1/2, 1/2) is not a nabla point of l1^2",
             "Fails witness {1: 1} deficiency 1", [&] { return nabla_text(nabla_check(*l1_2, e(1, 0.5) + e(2, 0.5))); });
  suite.text("diag.nabla-linf-edge", "diag", "e1 is not a nabla point of linf^2",
             "Fails witness {1: 1, 2: 1} deficiency 1", [&] { return nabla_text(nabla_check(*linf_2, e(1))); });
  suite.text("diag.daugavet-l1-midpoint", "diag", "(1/2, 1/2) in l1^2 fails the Daugavet check on the nabla side",
             "Fails Nabla", [&] {
               const auto r = daugavet_check(*l1_2, e(1, 0.5) + e(2, 0.5), 0.1);
               return std::string(to_string(r.verdict)) + " " +
                      (r.parts[0].verdict == Verdict::kFails ? "Nabla" : "DPoint");
             });
  suite.text("diag.daugavet-linf-edge", "diag", "e1 in linf^2 fails the Daugavet check on the nabla side",
             "Fails Nabla", [&] {
               const auto r = daugavet_check(*linf_2, e(1), 0.1);
               return std::string(to_string(r.verdict)) + " " +
                      (r.parts[0].verdict == Verdict::kFails ? "Nabla" : "DPoint");
             });
  suite.text("diag.non-nabla-l1", "diag", "first non-nabla point found in l1^2", "{1: 0.5, 2: 0.5}",
             [&] { return to_string(find_non_nabla(*l1_2, 100)); });
  suite.text("diag.non-nabla-linf", "diag", "first non-nabla point found in linf^2", "{1: 1}",
             [&] { return to_string(find_non_nabla(*linf_2, 100)); });

  suite.text("cli.norm-unit-generator", "cli", "norm of \"1,2,0,0\" in renorm l2^4 as printed", "1.000000000000",
             [&] {
               const auto s = parse_space(R"({"type":"renorm","base":{"type":"lp","p":2,"dim":4}})");
               char buf[64];
               std::snprintf(buf, sizeof buf, "%.12f", norm(*s, parse_vector("1,2,0,0")));
               return std::string(buf);
             });

  suite.number("sweep.primal-witness-n4", "sweep", "primal witness distance column at n = 4", 2.0,
               [&] { return sweep_renorm_l2(4, 4, {0.5}).front().primal_witness_distance; });
  return suite.take();
}

std::string format_table(const std::vector<VerifyRow>& rows) {
  std::size_t wid = 2;
  std::size_t wmod = 6;
  std::size_t wexp = 8;
  for (const auto& r : rows) {
    wid = std::max(wid, r.id.size());
    wmod = std::max(wmod, r.module.size());
    wexp = std::max(wexp, r.expected.size());
  }
  std::string out;
  char buf[1024];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-4s  %-*s  %-*s  expected %-*s  computed %s\n", r.pass ? "ok" : "FAIL",
                  static_cast<int>(wid), r.id.c_str(), static_cast<int>(wmod), r.module.c_str(),
                  static_cast<int>(wexp), r.expected.c_str(), r.computed.c_str());
    out += buf;
    out += "      " + r.identity + "\n";
  }
  const auto passed = std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
  std::snprintf(buf, sizeof buf, "%zd/%zu rows pass\n", static_cast<std::ptrdiff_t>(passed), rows.size());
  return out + buf;
}

std::string format_json(const std::vector<VerifyRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back(Json{{"id", r.id},
                       {"module", r.module},
                       {"identity", r.identity},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"pass", r.pass}});
  }
  return arr.dump(2) + "\n";
}

std::vector<SweepRow> sweep_renorm_l2(int n_lo, int n_hi, const std::vector<double>& alphas) {
  if (n_lo < 2 || n_hi < n_lo) {
    throw Error(ErrorCode::kInvalidDescriptor, "sweep dimensions must satisfy 2 <= lo <= hi");
  }
  if (n_hi > kMaxSweepDim) {
    throw Error(ErrorCode::kSizeLimit, "sweep capped at n = " + std::to_string(kMaxSweepDim));
  }
  std::vector<double> grid = alphas;
  std::sort(grid.begin(), grid.end());
  for (double a : grid) {
    if (!(a > 0.0 && a <= 2.0)) throw Error(ErrorCode::kInvalidDescriptor, "alpha must lie in (0, 2]");
  }
  const auto two = Exponent::finite(2.0);
  const auto e1 = SparseVector::unit(1);
  std::vector<SweepRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto space = renormed_space(two, n);
    const auto& rs = std::get<RenormedSpace>(space->kind);

    const double c = 1.0 / (1.0 + std::sqrt(static_cast<double>(n - 1)));
    SparseVector g;
    SparseVector flat;
    for (int j = 2; j <= n; ++j) {
      g.set(j, c);
      flat.set(j, 1.0);
    }
    if (rnorm_dual(rs, e1 - g) > 1.0 + kTol) throw Error(ErrorCode::kNumerical, "exposing functional left the dual ball");
    const double margin = exposure_margin(rs, g);

    const double primal = rnorm(rs, e1 - primal_witness(rs, e1, n));
    double dual = 0.0;
    if (n >= 3) {
      dual = rnorm_dual(rs, e1 - dual_witness(rs, e1, (n - 1) / 2));
    } else {
      dual = rnorm_dual(rs, e1 - (e1 - SparseVector::unit(n)));
    }

    const std::vector<SparseVector> functionals{
        e1, e1 - SparseVector::unit(2), e1 - (1.0 / lp_norm(flat, two.conjugate())) * flat};
    const auto points = sample_extreme_points(rs, e1, 32);
    for (double alpha : grid) {
      double worst = 2.0;
      for (const auto& f : functionals) worst = std::min(worst, slice_sup_sampled(*space, e1, SliceSpec{f, alpha}, points));
      rows.push_back(SweepRow{n, alpha, 2.0 - worst, margin, primal, dual});
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "n,alpha,dpoint_deficiency_proxy,exposure_margin,primal_witness_distance,dual_witness_distance\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.n, r.alpha, r.dpoint_deficiency_proxy,
                  r.exposure_margin, r.primal_witness_distance, r.dual_witness_distance);
    out += buf;
  }
  return out;
}

}  // namespace dlab
