#include "dlab/renorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "dlab/error.hpp"
#include "dlab/norm.hpp"

namespace dlab {

namespace {

void check_dim(const RenormedSpace& space, const SparseVector& x) {
  if (x.max_index() > space.base.dim) {
    throw Error(ErrorCode::kOutOfDimension, to_string(x) + " exceeds dimension " + std::to_string(space.base.dim));
  }
}

// Coefficient a >= 0 with ||v + a e||_p = 1 for e disjoint from v, ||v||_p <= 1.
double top_up(double norm_v, Exponent p) {
  if (p.is_infinite()) return 1.0;
  const double gap = std::clamp(1.0 - std::pow(norm_v, p.value()), 0.0, 1.0);
  return std::pow(gap, 1.0 / p.value());
}

}  // namespace

double rnorm(const RenormedSpace& space, const SparseVector& x) {
  check_dim(space, x);
  const auto parts = split_parts(x);
  const double c = parts.e1coeff;
  const double plus = lp_norm(parts.plus, space.base.p);
  const double minus = lp_norm(parts.minus, space.base.p);
  return std::max({std::abs(c), std::abs(c - plus), std::abs(c + minus), 0.5 * (plus + minus)});
}

double rnorm_dual(const RenormedSpace& space, const SparseVector& f) {
  check_dim(space, f);
  const auto parts = split_parts(f);
  const auto q = space.base.p.conjugate();
  const double c = parts.e1coeff;
  return std::max(std::abs(c + 2.0 * lp_norm(parts.plus, q)), std::abs(c - 2.0 * lp_norm(parts.minus, q)));
}

DualDecomposition decompose_dual(const RenormedSpace& space, const SparseVector& zstar) {
  const double c = zstar[1];
  if (c < 0.0) {
    throw Error(ErrorCode::kNegativeFirstCoordinate, "z*(e1) = " + std::to_string(c) + " is negative; negate first");
  }
  if (rnorm_dual(space, zstar) > 1.0 + kTol) {
    throw Error(ErrorCode::kNotInBall, to_string(zstar) + " lies outside the dual unit ball");
  }
  const auto parts = split_parts(zstar);
  DualDecomposition d;
  if (c >= 1.0) {
    d.lambda = 1.0;
    d.ystar = parts.minus;
    return d;
  }
  d.lambda = c;
  d.xstar = (2.0 / (1.0 - c)) * parts.plus;
  d.ystar = (2.0 / (1.0 + c)) * parts.minus;
  return d;
}

SparseVector recompose(const DualDecomposition& d) {
  return d.lambda * (SparseVector::unit(1) - d.ystar) + (0.5 * (1.0 - d.lambda)) * (d.xstar - d.ystar);
}

SparseVector primal_witness(const RenormedSpace& space, const SparseVector& z, int k) {
  check_dim(space, z);
  if (k == 1 || z[k] != 0.0) {
    throw Error(ErrorCode::kBadIndex, "witness index " + std::to_string(k) + " must be a free coordinate >= 2");
  }
  if (k < 1 || k > space.base.dim) {
    throw Error(ErrorCode::kOutOfDimension, "witness index " + std::to_string(k) + " outside 2.." +
                                                std::to_string(space.base.dim));
  }
  if (rnorm(space, z) > 1.0 + kTol) throw Error(ErrorCode::kNotInBall, to_string(z) + " lies outside the unit ball");
  const double lambda = 0.5 * (1.0 + z[1]);
  const auto parts = split_parts(z);
  const SparseVector x = lambda > 0.0 ? (1.0 / (2.0 * lambda)) * parts.plus : SparseVector{};
  const double a = top_up(lp_norm(x, space.base.p), space.base.p);
  return z + SparseVector::unit(k, 2.0 * lambda * a);
}

SparseVector dual_witness(const RenormedSpace& space, const SparseVector& zstar, int k) {
  check_dim(space, zstar);
  if (k < 1 || zstar[2 * k] != 0.0 || zstar[2 * k + 1] != 0.0) {
    throw Error(ErrorCode::kBadIndex, "coordinates " + std::to_string(2 * k) + ", " + std::to_string(2 * k + 1) +
                                          " must be free");
  }
  if (2 * k + 1 > space.base.dim) {
    throw Error(ErrorCode::kOutOfDimension, "coordinate " + std::to_string(2 * k + 1) + " exceeds dimension " +
                                                std::to_string(space.base.dim));
  }
  const auto d = decompose_dual(space, zstar);
  const auto q = space.base.p.conjugate();
  const double a = top_up(lp_norm(d.xstar, q), q);
  const double b = top_up(lp_norm(d.ystar, q), q);
  return zstar + SparseVector::unit(2 * k, 0.5 * (1.0 - d.lambda) * a) -
         SparseVector::unit(2 * k + 1, 0.5 * (1.0 + d.lambda) * b);
}

SpacePtr corner_renorm(const Space& space) {
  const auto one = Exponent::finite(1.0);
  return absolute_sum(lp_space(one, 2), restrict_leading(space), lp_space(one, 1));
}

double exposure_margin(const RenormedSpace& space, const SparseVector& g) {
  check_dim(space, g);
  if (g[1] != 0.0) throw Error(ErrorCode::kBadIndex, "g must vanish on coordinate 1");
  const int n = space.base.dim;
  double smallest = n >= 2 ? std::numeric_limits<double>::infinity() : 1.0;
  for (int j = 2; j <= n; ++j) {
    if (g[j] < 0.0) throw Error(ErrorCode::kBadIndex, "g must be nonnegative");
    smallest = std::min(smallest, g[j]);
  }
  const double tail = lp_norm(g, space.base.p.conjugate());
  return std::min({2.0, 2.0 * smallest, 2.0 - 2.0 * tail});
}

std::vector<SparseVector> sample_extreme_points(const RenormedSpace& space, const SparseVector& hint,
                                                std::size_t random_count) {
  const int n = space.base.dim;
  std::vector<SparseVector> dirs;
  for (int j = 2; j <= n; ++j) dirs.push_back(SparseVector::unit(j));
  const auto parts = split_parts(hint);
  if (!parts.plus.empty()) dirs.push_back(parts.plus);
  if (!parts.minus.empty()) dirs.push_back(parts.minus);
  SparseVector flat;
  for (int j = 2; j <= n; ++j) flat.set(j, 1.0);
  if (!flat.empty()) dirs.push_back(flat);
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t k = 0; k < random_count && n >= 2; ++k) {
    SparseVector w;
    for (int j = 2; j <= n; ++j) w.set(j, unit(rng));
    if (!w.empty()) dirs.push_back(std::move(w));
  }
  const auto e1 = SparseVector::unit(1);
  std::vector<SparseVector> ext{e1, -e1};
  for (const auto& w : dirs) {
    const auto g = e1 + (2.0 / lp_norm(w, space.base.p)) * w;
    ext.push_back(g);
    ext.push_back(-g);
  }
  return ext;
}

std::shared_ptr<const VBall> renorm_generators(const RenormedSpace& space) {
  const int n = space.base.dim;
  const auto e1 = SparseVector::unit(1);
  std::vector<SparseVector> gens{e1, -e1};
  auto push = [&](const SparseVector& x) {
    gens.push_back(e1 + 2.0 * x);
    gens.push_back(-(e1 + 2.0 * x));
  };
  if (space.base.p.is(1.0) || n <= 2) {
    for (int j = 2; j <= n; ++j) push(SparseVector::unit(j));
  } else if (space.base.p.is_infinite()) {
    if (n > 12) throw Error(ErrorCode::kSizeLimit, "l_inf renorm vertex list capped at dimension 12");
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      SparseVector indicator;
      for (int j = 2; j <= n; ++j) {
        if (mask & (1u << (j - 2))) indicator.set(j, 1.0);
      }
      push(indicator);
    }
  } else {
    throw Error(ErrorCode::kNotPolyhedral, "renormed ball over l" + to_string(space.base.p) + " has no vertex list");
  }
  return VBall::create(std::move(gens), n);
}

}  // namespace dlab
