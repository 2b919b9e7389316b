#include "dlab/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dlab/error.hpp"
#include "dlab/lp.hpp"

namespace dlab {

namespace {

using Dense = std::vector<double>;

std::vector<Dense> densify(const std::vector<SparseVector>& vs, int dim) {
  std::vector<Dense> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v.to_dense(dim));
  return out;
}

bool contains_close(const std::vector<SparseVector>& list, const SparseVector& v, double tol) {
  return std::any_of(list.begin(), list.end(), [&](const SparseVector& w) { return max_abs_diff(v, w) <= tol; });
}

// Solves A x = b for square A in place; returns false when A is numerically singular.
bool solve_square(std::vector<Dense> a, Dense b, Dense& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-10) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return true;
}

// Snap values within 1e-12 of a multiple of 1/1024 so facet normals of
// rational bodies come out exact enough to deduplicate and compare.
double snap(double v) {
  const double scaled = v * 1024.0;
  const double r = std::round(scaled);
  return std::abs(scaled - r) < 1e-9 ? r / 1024.0 : v;
}

}  // namespace

int rank_of(const std::vector<SparseVector>& vectors, int dim) {
  auto rows = densify(vectors, dim);
  int rank = 0;
  std::size_t row = 0;
  for (int col = 0; col < dim && row < rows.size(); ++col) {
    std::size_t piv = row;
    for (std::size_t r = row + 1; r < rows.size(); ++r) {
      if (std::abs(rows[r][col]) > std::abs(rows[piv][col])) piv = r;
    }
    if (std::abs(rows[piv][col]) <= kTol) continue;
    std::swap(rows[piv], rows[row]);
    for (std::size_t r = row + 1; r < rows.size(); ++r) {
      const double f = rows[r][col] / rows[row][col];
      for (int c = col; c < dim; ++c) rows[r][c] -= f * rows[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

VBall::VBall(std::vector<SparseVector> generators, int dim) : generators_(std::move(generators)), dim_(dim) {}

std::shared_ptr<const VBall> VBall::create(std::vector<SparseVector> generators, int dim) {
  if (dim < 1) throw Error(ErrorCode::kInvalidDescriptor, "ball dimension must be positive");
  for (const auto& g : generators) {
    if (g.max_index() > dim) throw Error(ErrorCode::kOutOfDimension, "generator " + to_string(g) + " exceeds dimension");
  }
  for (const auto& g : generators) {
    if (!contains_close(generators, -g, kTol)) {
      throw Error(ErrorCode::kInvalidDescriptor, "generator set is not closed under negation: missing -" + to_string(g));
    }
  }
  if (rank_of(generators, dim) < dim) {
    throw Error(ErrorCode::kInvalidDescriptor, "generators do not span R^" + std::to_string(dim));
  }
  return std::shared_ptr<const VBall>(new VBall(std::move(generators), dim));
}

void VBall::check_dim(const SparseVector& x) const {
  if (x.max_index() > dim_) {
    throw Error(ErrorCode::kOutOfDimension,
                "vector " + to_string(x) + " exceeds ball dimension " + std::to_string(dim_));
  }
}

double VBall::support(const SparseVector& f) const {
  check_dim(f);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& g : generators_) best = std::max(best, pairing(f, g));
  return best;
}

const std::vector<SparseVector>& VBall::extreme_points() const {
  std::call_once(extreme_once_, [this] {
    std::vector<SparseVector> unique;
    for (const auto& g : generators_) {
      if (g.empty()) continue;
      if (!contains_close(unique, g, 1e-12)) unique.push_back(g);
    }
    if (unique.size() == 1) {
      extreme_ = unique;
      return;
    }
    const auto dense = densify(unique, dim_);
    const auto d = static_cast<std::size_t>(dim_);
    // unique[k] is extreme iff some f in the unit box separates it strictly from
    // the others: maximize f(g_k) - t subject to f(g_i) <= t for i != k.
    for (std::size_t k = 0; k < unique.size(); ++k) {
      std::vector<double> objective(dense[k]);
      objective.push_back(-1.0);
      lp::LinearProgram program(std::move(objective));
      program.bounds.assign(d, lp::Bounds{-1.0, 1.0});
      program.bounds.push_back(lp::Bounds::free());
      for (std::size_t i = 0; i < unique.size(); ++i) {
        if (i == k) continue;
        std::vector<double> row(dense[i]);
        row.push_back(-1.0);
        program.add(std::move(row), lp::Relation::kLessEqual, 0.0);
      }
      const auto sol = lp::solve(program);
      if (sol.status == lp::Status::kOptimal && sol.value > kTol) extreme_.push_back(unique[k]);
    }
  });
  return extreme_;
}

double VBall::gauge(const SparseVector& x) const {
  check_dim(x);
  if (x.empty()) return 0.0;
  // Dual form: max f(x) over f with f(g) <= 1 on every extreme point.
  lp::LinearProgram program(x.to_dense(dim_));
  for (const auto& g : extreme_points()) program.add(g.to_dense(dim_), lp::Relation::kLessEqual, 1.0);
  const auto sol = lp::solve(program);
  if (sol.status != lp::Status::kOptimal) {
    throw Error(ErrorCode::kNumerical, "gauge LP did not reach an optimum for " + to_string(x));
  }
  return sol.value;
}

bool VBall::facets_within_caps() const {
  return dim_ <= kMaxFacetDim && extreme_points().size() <= kMaxFacetVertices;
}

const std::vector<SparseVector>& VBall::facet_normals() const {
  if (!facets_within_caps()) {
    throw Error(ErrorCode::kSizeLimit, "facet enumeration capped at dim " + std::to_string(kMaxFacetDim) + " and " +
                                           std::to_string(kMaxFacetVertices) + " extreme points (have dim " +
                                           std::to_string(dim_) + ", " +
                                           std::to_string(extreme_points().size()) + " points)");
  }
  std::call_once(facet_once_, [this] {
    const auto& ext = extreme_points();
    const auto dense = densify(ext, dim_);
    const auto d = static_cast<std::size_t>(dim_);
    std::vector<std::size_t> pick(d);
    // Enumerate d-subsets in lexicographic order.
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    const std::size_t total = ext.size();
    if (total < d) return;
    while (true) {
      std::vector<Dense> a;
      a.reserve(d);
      for (auto idx : pick) a.push_back(dense[idx]);
      Dense normal;
      if (solve_square(a, Dense(d, 1.0), normal)) {
        bool supporting = true;
        for (const auto& g : dense) {
          double v = 0.0;
          for (std::size_t c = 0; c < d; ++c) v += normal[c] * g[c];
          if (v > 1.0 + 1e-9) {
            supporting = false;
            break;
          }
        }
        if (supporting) {
          for (auto& v : normal) v = snap(v);
          auto f = SparseVector::from_dense(normal);
          if (!contains_close(facets_, f, 1e-9)) facets_.push_back(std::move(f));
        }
      }
      // advance combination
      std::size_t i = d;
      while (i > 0 && pick[i - 1] == total - d + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
  });
  return facets_;
}

double VBall::norm_via_facets(const SparseVector& x) const {
  check_dim(x);
  double best = 0.0;
  for (const auto& f : facet_normals()) best = std::max(best, pairing(f, x));
  return best;
}

double VBall::norm(const SparseVector& x) const {
  return facets_within_caps() ? norm_via_facets(x) : gauge(x);
}

bool VBall::adjacent(const SparseVector& u, const SparseVector& v) const {
  if (max_abs_diff(u, v) <= kTol || max_abs_diff(u, -v) <= kTol) return false;
  std::vector<SparseVector> common;
  for (const auto& f : facet_normals()) {
    if (pairing(f, u) >= 1.0 - kTol && pairing(f, v) >= 1.0 - kTol) common.push_back(f);
  }
  return rank_of(common, dim_) == dim_ - 1;
}

std::vector<SparseVector> VBall::slice_vertices(const SliceSpec& slice) const {
  check_dim(slice.functional);
  const double level = 1.0 - slice.depth;
  const auto& ext = extreme_points();
  std::vector<SparseVector> out;
  for (const auto& u : ext) {
    if (pairing(slice.functional, u) >= level - kTol) out.push_back(u);
  }
  for (const auto& u : ext) {
    const double fu = pairing(slice.functional, u);
    if (fu <= level + kTol) continue;
    for (const auto& w : ext) {
      const double fw = pairing(slice.functional, w);
      if (fw >= level - kTol || !adjacent(u, w)) continue;
      const double t = (fu - level) / (fu - fw);
      out.push_back(u + t * (w - u));
    }
  }
  return out;
}

SliceOptimum VBall::slice_max_linear(const SliceSpec& slice, const SparseVector& objective) const {
  check_dim(slice.functional);
  check_dim(objective);
  const double level = 1.0 - slice.depth;
  const double top = support(slice.functional);
  if (top < level - kTol) {
    throw Error(ErrorCode::kEmptySlice, "slice functional peaks at " + std::to_string(top) + " below level " +
                                            std::to_string(level));
  }
  const auto& ext = extreme_points();
  std::vector<double> obj(ext.size());
  std::vector<double> cut(ext.size());
  for (std::size_t i = 0; i < ext.size(); ++i) {
    obj[i] = pairing(objective, ext[i]);
    cut[i] = pairing(slice.functional, ext[i]);
  }
  lp::LinearProgram program(obj);
  program.all_nonnegative();
  program.add(std::vector<double>(ext.size(), 1.0), lp::Relation::kEqual, 1.0);
  program.add(cut, lp::Relation::kGreaterEqual, std::min(level, top));
  const auto sol = lp::solve(program);
  if (sol.status != lp::Status::kOptimal) {
    throw Error(ErrorCode::kNumerical, "slice LP did not reach an optimum");
  }
  SliceOptimum out;
  out.value = sol.value;
  for (std::size_t i = 0; i < ext.size(); ++i) {
    if (sol.point[i] > 0.0) out.argmax += sol.point[i] * ext[i];
  }
  out.degenerate = top <= level + kTol;
  return out;
}

}  // namespace dlab
