#include "dlab/sums.hpp"

#include <algorithm>
#include <cmath>

#include "dlab/diag.hpp"
#include "dlab/error.hpp"
#include "dlab/norm.hpp"

namespace dlab {

namespace {

bool is_nabla(const Space& space, const SparseVector& x) {
  if (std::abs(norm(space, x) - 1.0) > kTol) return false;
  return nabla_check(space, x).verdict == Verdict::kHolds;
}

}  // namespace

SumPoint split_sum(const AbsoluteSumSpace& sum, const SparseVector& x) {
  const int left_dim = dim(*sum.left);
  SumPoint p;
  for (const auto& [i, v] : x.entries()) {
    if (i <= left_dim) {
      p.left.set(i, v);
    } else {
      p.right.set(i - left_dim, v);
    }
  }
  return p;
}

SparseVector embed_sum(const AbsoluteSumSpace& sum, const SumPoint& p) {
  const int left_dim = dim(*sum.left);
  if (p.left.max_index() > left_dim || p.right.max_index() > dim(*sum.right)) {
    throw Error(ErrorCode::kOutOfDimension, "sum component exceeds its dimension");
  }
  SparseVector x = p.left;
  for (const auto& [i, v] : p.right.entries()) x.set(i + left_dim, v);
  return x;
}

double sum_norm(const AbsoluteSumSpace& sum, const SumPoint& p) {
  return norm(*sum.norm, SparseVector{{1, norm(*sum.left, p.left)}, {2, norm(*sum.right, p.right)}});
}

std::vector<SparseVector> quadrant_extremes(const Space& norm2d) {
  std::vector<SparseVector> out{SparseVector::unit(1), SparseVector::unit(2)};
  for (const auto& g : to_vball(norm2d)->extreme_points()) {
    if (g[1] >= 0.0 && g[2] >= 0.0 && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

std::shared_ptr<const VBall> sum_ball(const AbsoluteSumSpace& sum) {
  const auto left = to_vball(*sum.left);
  const auto right = to_vball(*sum.right);
  std::vector<SparseVector> gens;
  for (const auto& ab : quadrant_extremes(*sum.norm)) {
    const double a = ab[1];
    const double b = ab[2];
    const std::vector<SparseVector> zero{SparseVector{}};
    const auto& us = a > 0.0 ? left->extreme_points() : zero;
    const auto& vs = b > 0.0 ? right->extreme_points() : zero;
    for (const auto& u : us) {
      for (const auto& v : vs) gens.push_back(embed_sum(sum, {a * u, b * v}));
    }
  }
  return VBall::create(std::move(gens), dim(*sum.left) + dim(*sum.right));
}

VerdictPair check_l1_transfer(const SpacePtr& x_space, const SparseVector& x, const SpacePtr& y_space) {
  const auto one = Exponent::finite(1.0);
  const auto sum = absolute_sum(lp_space(one, 2), x_space, y_space);
  return {is_nabla(*x_space, x), is_nabla(*sum, x)};
}

VerdictPair check_linf_characterization(const SpacePtr& x_space, const SparseVector& x, const SpacePtr& y_space,
                                        const SparseVector& y) {
  const auto sum = absolute_sum(lp_space(Exponent::infinity(), 2), x_space, y_space);
  const auto& parts = std::get<AbsoluteSumSpace>(sum->kind);
  const auto point = embed_sum(parts, {x, y});
  return {is_nabla(*sum, point), is_nabla(*x_space, x) && is_nabla(*y_space, y)};
}

}  // namespace dlab
