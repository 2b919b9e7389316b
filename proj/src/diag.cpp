#include "dlab/diag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "dlab/error.hpp"
#include "dlab/norm.hpp"
#include "dlab/renorm.hpp"
#include "dlab/sums.hpp"

namespace dlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Distance used to step off a point along a smooth sphere.
constexpr double kNudge = 1e-4;

// Nearest points of scale * ext(B) to x: over all of them, and over those different from x.
struct Reach {
  double all = kInf;
  SparseVector at_all;
  double excl = kInf;
  SparseVector at_excl;
  bool exact = true;
  std::size_t sweep = 0;
};

Reach reach(const Space& space, const SparseVector& x, double scale);

void offer(Reach& r, const Space& space, const SparseVector& x, const SparseVector& p, double scale) {
  const double d = norm(space, x - p);
  ++r.sweep;
  if (d < r.all) {
    r.all = d;
    r.at_all = p;
  }
  if (d > kTol * std::max(1.0, scale) && d < r.excl) {
    r.excl = d;
    r.at_excl = p;
  }
}

Reach reach_finite(const Space& space, const SparseVector& x, double scale, const std::vector<SparseVector>& ext) {
  Reach r;
  for (const auto& e : ext) offer(r, space, x, scale * e, scale);
  return r;
}

Reach reach_sphere(const LpSpace& s, const SparseVector& x, double scale) {
  Reach r;
  r.sweep = 1;
  const double len = lp_norm(x, s.p);
  r.all = std::abs(len - scale);
  r.at_all = len > 0.0 ? (scale / len) * x : SparseVector::unit(1, scale);
  if (r.all > kTol * std::max(1.0, scale)) {
    r.excl = r.all;
    r.at_excl = r.at_all;
    return r;
  }
  // x sits on the sphere; other sphere points come arbitrarily close.
  int j = 1;
  while (j < s.dim && x[j] != 0.0) ++j;
  auto moved = x + SparseVector::unit(j, kNudge * std::max(1.0, scale));
  moved *= scale / lp_norm(moved, s.p);
  r.excl = 0.0;
  r.at_excl = moved;
  return r;
}

double combine(const Space& norm2d, double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return kInf;
  return norm(norm2d, SparseVector{{1, a}, {2, b}});
}

Reach reach_sum(const AbsoluteSumSpace& s, const SparseVector& x, double scale) {
  const auto p = split_sum(s, x);
  std::vector<SparseVector> corners;
  bool exact = is_polyhedral(*s.norm);
  if (exact) {
    corners = quadrant_extremes(*s.norm);
  } else {
    auto on_sphere = [&](double a, double b) {
      SparseVector v{{1, a}, {2, b}};
      return (1.0 / norm(*s.norm, v)) * v;
    };
    for (std::size_t k = 0; k <= kQuadrantSamples; ++k) {
      const double t = (std::numbers::pi / 2.0) * static_cast<double>(k) / static_cast<double>(kQuadrantSamples);
      corners.push_back(on_sphere(std::cos(t), std::sin(t)));
    }
    const double lx = norm(*s.left, p.left);
    const double ly = norm(*s.right, p.right);
    if (lx + ly > 0.0) corners.push_back(on_sphere(lx, ly));
  }
  Reach r;
  r.exact = exact;
  for (const auto& ab : corners) {
    const auto rx = reach(*s.left, p.left, scale * ab[1]);
    const auto ry = reach(*s.right, p.right, scale * ab[2]);
    r.exact = r.exact && rx.exact && ry.exact;
    r.sweep += rx.sweep * ry.sweep;
    const double all = combine(*s.norm, rx.all, ry.all);
    if (all < r.all) {
      r.all = all;
      r.at_all = embed_sum(s, {rx.at_all, ry.at_all});
    }
    const double left_moves = combine(*s.norm, rx.excl, ry.all);
    if (left_moves < r.excl) {
      r.excl = left_moves;
      r.at_excl = embed_sum(s, {rx.at_excl, ry.at_all});
    }
    const double right_moves = combine(*s.norm, rx.all, ry.excl);
    if (right_moves < r.excl) {
      r.excl = right_moves;
      r.at_excl = embed_sum(s, {rx.at_all, ry.at_excl});
    }
  }
  return r;
}

Reach reach(const Space& space, const SparseVector& x, double scale) {
  if (scale == 0.0) {
    Reach r;
    r.sweep = 1;
    r.all = norm(space, x);
    if (!x.empty()) r.excl = r.all;
    return r;
  }
  if (is_polyhedral(space)) return reach_finite(space, x, scale, to_vball(space)->extreme_points());
  if (const auto* lp = std::get_if<LpSpace>(&space.kind)) return reach_sphere(*lp, x, scale);
  if (const auto* sum = std::get_if<AbsoluteSumSpace>(&space.kind)) return reach_sum(*sum, x, scale);
  if (const auto* rn = std::get_if<RenormedSpace>(&space.kind)) {
    auto r = reach_finite(space, x, scale, sample_extreme_points(*rn, (1.0 / scale) * x, kRenormSamples));
    r.exact = false;
    return r;
  }
  throw Error(ErrorCode::kNotPolyhedral, "no denting structure available for " + to_string(space));
}

void require_sphere(const Space& space, const SparseVector& x) {
  const double r = norm(space, x);
  if (std::abs(r - 1.0) > kTol) {
    throw Error(ErrorCode::kNotOnSphere, to_string(x) + " has norm " + std::to_string(r) + " in " + to_string(space));
  }
}

void push_unique(std::vector<SparseVector>& list, SparseVector v) {
  for (const auto& w : list) {
    if (max_abs_diff(v, w) <= 1e-12) return;
  }
  list.push_back(std::move(v));
}

}  // namespace

const char* to_string(Property property) {
  switch (property) {
    case Property::kNabla: return "Nabla";
    case Property::kDPoint: return "DPoint";
    case Property::kDeltaDeficiency: return "DeltaDeficiency";
    case Property::kDaugavet: return "Daugavet";
    case Property::kStronglyExposed: return "StronglyExposed";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds: return "Holds";
    case Verdict::kFails: return "Fails";
    case Verdict::kLowerBoundOnly: return "LowerBoundOnly";
  }
  return "?";
}

double slice_sup(const Space& space, const SparseVector& x, const SliceSpec& slice) {
  const auto ball = to_vball(space);
  double best = -kInf;
  for (const auto& g : ball->facet_normals()) {
    const auto opt = ball->slice_max_linear(slice, -g);
    best = std::max(best, pairing(g, x) + opt.value);
  }
  return best;
}

double slice_sup_sampled(const Space& space, const SparseVector& x, const SliceSpec& slice,
                         const std::vector<SparseVector>& ball_points) {
  const double level = 1.0 - slice.depth;
  std::vector<const SparseVector*> inside;
  std::vector<const SparseVector*> outside;
  for (const auto& p : ball_points) (pairing(slice.functional, p) >= level ? inside : outside).push_back(&p);
  if (inside.empty()) throw Error(ErrorCode::kEmptySlice, "no sampled point lies in the slice");
  double best = 0.0;
  for (const auto* p : inside) {
    best = std::max(best, norm(space, x - *p));
    const double fp = pairing(slice.functional, *p);
    for (const auto* q : outside) {
      const double fq = pairing(slice.functional, *q);
      const double t = (fp - level) / (fp - fq);
      best = std::max(best, norm(space, x - (*p + t * (*q - *p))));
    }
  }
  return best;
}

DentingInfimum denting_infimum(const Space& space, const SparseVector& x) {
  const auto r = reach(space, x, 1.0);
  return {r.excl, r.at_excl, r.exact, r.sweep};
}

DiagnosticReport nabla_check(const Space& space, const SparseVector& x, double eps) {
  require_sphere(space, x);
  const auto inf = denting_infimum(space, x);
  DiagnosticReport report;
  report.property = Property::kNabla;
  report.params.eps = eps;
  report.params.sweep_size = inf.sweep;
  if (std::isinf(inf.value)) {
    report.verdict = inf.exact ? Verdict::kHolds : Verdict::kLowerBoundOnly;
    return report;
  }
  report.deficiency = std::max(0.0, 2.0 - inf.value);
  const double achieved = norm(space, x - inf.witness);
  report.witness = Witness{inf.witness, {}, achieved};
  if (inf.exact) {
    report.verdict = inf.value >= 2.0 - eps ? Verdict::kHolds : Verdict::kFails;
  } else {
    report.verdict = achieved < 2.0 - eps ? Verdict::kFails : Verdict::kLowerBoundOnly;
  }
  return report;
}

std::vector<SparseVector> supporting_candidates(const Space& space, const SparseVector& x) {
  const auto ball = to_vball(space);
  std::vector<SparseVector> vertices;
  for (const auto& f : ball->facet_normals()) {
    if (pairing(f, x) >= 1.0 - kTol) vertices.push_back(f);
  }
  std::vector<SparseVector> out = vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) push_unique(out, 0.5 * (vertices[i] + vertices[j]));
  }
  if (vertices.size() > 2) {
    SparseVector bary;
    for (const auto& f : vertices) bary += f;
    push_unique(out, (1.0 / static_cast<double>(vertices.size())) * bary);
  }
  return out;
}

DiagnosticReport strongly_exposed_check(const Space& space, const SparseVector& x) {
  require_sphere(space, x);
  const auto ball = to_vball(space);
  const auto candidates = supporting_candidates(space, x);
  DiagnosticReport report;
  report.property = Property::kStronglyExposed;
  report.params.sweep_size = candidates.size();
  double best = -kInf;
  SparseVector best_f;
  SparseVector blocker;
  for (const auto& f : candidates) {
    double margin = kInf;
    SparseVector nearest;
    for (const auto& v : ball->extreme_points()) {
      if (max_abs_diff(v, x) <= kTol) continue;
      const double m = 1.0 - pairing(f, v);
      if (m < margin) {
        margin = m;
        nearest = v;
      }
    }
    if (margin > best) {
      best = margin;
      best_f = f;
      blocker = nearest;
    }
  }
  if (best > kTol) {
    report.verdict = Verdict::kHolds;
    report.witness = Witness{{}, best_f, best};
  } else {
    report.verdict = Verdict::kFails;
    report.deficiency = std::max(0.0, -best);
    report.witness = Witness{blocker, best_f, best};
  }
  return report;
}

DiagnosticReport dpoint_deficiency(const Space& space, const SparseVector& x, double alpha) {
  require_sphere(space, x);
  const auto candidates = supporting_candidates(space, x);
  std::size_t face_vertices = 0;
  for (const auto& f : to_vball(space)->facet_normals()) face_vertices += pairing(f, x) >= 1.0 - kTol;
  DiagnosticReport report;
  report.property = Property::kDPoint;
  report.params.alpha = alpha;
  report.params.sweep_size = candidates.size();
  double worst = kInf;
  SparseVector worst_f;
  for (const auto& f : candidates) {
    const double s = slice_sup(space, x, SliceSpec{f, alpha});
    if (s < worst) {
      worst = s;
      worst_f = f;
    }
  }
  report.deficiency = std::max(0.0, 2.0 - worst);
  report.witness = Witness{{}, worst_f, worst};
  if (worst < 2.0 - kTol) {
    report.verdict = Verdict::kFails;
  } else {
    report.verdict = face_vertices > 1 ? Verdict::kLowerBoundOnly : Verdict::kHolds;
  }
  return report;
}

DiagnosticReport daugavet_check(const Space& space, const SparseVector& x, double alpha, double eps) {
  DiagnosticReport report;
  report.property = Property::kDaugavet;
  report.params.alpha = alpha;
  report.params.eps = eps;
  report.parts.push_back(nabla_check(space, x, eps));
  report.parts.push_back(dpoint_deficiency(space, x, alpha));
  report.verdict = Verdict::kLowerBoundOnly;
  for (const auto& part : report.parts) {
    report.deficiency = std::max(report.deficiency, part.deficiency);
    report.params.sweep_size += part.params.sweep_size;
    if (part.verdict == Verdict::kFails && report.verdict != Verdict::kFails) {
      report.verdict = Verdict::kFails;
      report.witness = part.witness;
    }
  }
  return report;
}

SparseVector find_non_nabla(const Space& space, std::size_t samples, std::uint64_t seed) {
  const int n = dim(space);
  if (n < 2) throw Error(ErrorCode::kInvalidDescriptor, "search needs dimension >= 2");
  auto fails = [&](const SparseVector& x) { return nabla_check(space, x).verdict == Verdict::kFails; };
  if (is_polyhedral(space)) {
    const auto ball = to_vball(space);
    if (ball->facets_within_caps()) {
      const auto& ext = ball->extreme_points();
      for (std::size_t i = 0; i < ext.size(); ++i) {
        for (std::size_t j = i + 1; j < ext.size(); ++j) {
          if (!ball->adjacent(ext[i], ext[j])) continue;
          const auto mid = 0.5 * (ext[i] + ext[j]);
          if (fails(mid)) return mid;
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (std::size_t k = 0; k < samples; ++k) {
    SparseVector v;
    for (int i = 1; i <= n; ++i) v.set(i, gauss(rng));
    if (v.empty()) continue;
    v *= 1.0 / norm(space, v);
    if (fails(v)) return v;
  }
  throw Error(ErrorCode::kSearchExhausted, "no non-nabla point found in " + to_string(space));
}

std::optional<Refinement> refine_slice(const Space& space, const SparseVector& x, const SliceSpec& slice,
                                       double eps) {
  const auto ball = to_vball(space);
  const double level = 1.0 - slice.depth;
  const SparseVector* far = nullptr;
  double far_dist = -1.0;
  for (const auto& v : ball->extreme_points()) {
    if (pairing(slice.functional, v) < level - kTol) continue;
    const double d = norm(space, x - v);
    if (d > far_dist) {
      far_dist = d;
      far = &v;
    }
  }
  if (far == nullptr || far_dist < 2.0 - eps) return std::nullopt;
  const auto exposed = strongly_exposed_check(space, *far);
  if (exposed.verdict != Verdict::kHolds) return std::nullopt;
  Refinement out;
  out.vertex = *far;
  out.slice = SliceSpec{exposed.witness->functional, eps / 2.0};
  for (int halvings = 0; halvings < 60; ++halvings) {
    const auto sub = ball->slice_vertices(out.slice);
    const bool inside = std::all_of(sub.begin(), sub.end(), [&](const SparseVector& v) {
      return pairing(slice.functional, v) >= level - kTol;
    });
    if (inside) {
      out.min_vertex_distance = kInf;
      for (const auto& v : sub) out.min_vertex_distance = std::min(out.min_vertex_distance, norm(space, x - v));
      return out;
    }
    out.slice.depth /= 2.0;
  }
  return std::nullopt;
}

}  // namespace dlab
