#include "dlab/norm.hpp"

#include <algorithm>
#include <cmath>

#include "dlab/error.hpp"
#include "dlab/renorm.hpp"
#include "dlab/sums.hpp"
#include "dlab/tensor.hpp"

namespace dlab {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

inline constexpr int kMaxCubeDim = 8;

std::shared_ptr<const VBall> lp_model(const LpSpace& s) {
  const int n = s.dim;
  std::vector<SparseVector> gens;
  if (s.p.is(1.0) || n == 1) {
    for (int i = 1; i <= n; ++i) {
      gens.push_back(SparseVector::unit(i));
      gens.push_back(SparseVector::unit(i, -1.0));
    }
  } else if (s.p.is_infinite()) {
    if (n > kMaxCubeDim) {
      throw Error(ErrorCode::kSizeLimit, "l_inf vertex model capped at dimension " + std::to_string(kMaxCubeDim));
    }
    // Sign vectors in lexicographic order with + before -.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      SparseVector g;
      for (int i = 1; i <= n; ++i) g.set(i, (mask >> (n - i)) & 1u ? -1.0 : 1.0);
      gens.push_back(std::move(g));
    }
  } else {
    throw Error(ErrorCode::kNotPolyhedral, "l" + to_string(s.p) + "^" + std::to_string(n) + " is not polyhedral");
  }
  return VBall::create(std::move(gens), n);
}

std::shared_ptr<const VBall> build_model(const Space& space) {
  return std::visit(Overloaded{
                        [](const LpSpace& s) { return lp_model(s); },
                        [](const PolytopeSpace& s) { return s.ball; },
                        [](const RenormedSpace& s) { return renorm_generators(s); },
                        [](const AbsoluteSumSpace& s) { return sum_ball(s); },
                        [](const TensorSpace& s) { return tensor_ball(*to_vball(*s.left), *to_vball(*s.right)); },
                    },
                    space.kind);
}

}  // namespace

double lp_norm(const SparseVector& x, Exponent p) {
  double peak = 0.0;
  for (const auto& [i, v] : x.entries()) peak = std::max(peak, std::abs(v));
  if (p.is_infinite() || peak == 0.0) return peak;
  if (p.is(1.0)) {
    double s = 0.0;
    for (const auto& [i, v] : x.entries()) s += std::abs(v);
    return s;
  }
  if (p.is(2.0)) {
    double s = 0.0;
    for (const auto& [i, v] : x.entries()) s += (v / peak) * (v / peak);
    return peak * std::sqrt(s);
  }
  double s = 0.0;
  for (const auto& [i, v] : x.entries()) s += std::pow(std::abs(v) / peak, p.value());
  return peak * std::pow(s, 1.0 / p.value());
}

void check_support(const Space& space, const SparseVector& x) {
  const int n = dim(space);
  if (x.max_index() > n) {
    throw Error(ErrorCode::kOutOfDimension, to_string(x) + " has support outside 1.." + std::to_string(n) + " of " +
                                                to_string(space));
  }
}

double norm(const Space& space, const SparseVector& x) {
  check_support(space, x);
  return std::visit(Overloaded{
                        [&](const LpSpace& s) { return lp_norm(x, s.p); },
                        [&](const PolytopeSpace& s) { return s.ball->norm(x); },
                        [&](const RenormedSpace& s) { return rnorm(s, x); },
                        [&](const AbsoluteSumSpace& s) { return sum_norm(s, split_sum(s, x)); },
                        [&](const TensorSpace& s) {
                          const auto left = to_vball(*s.left);
                          const auto right = to_vball(*s.right);
                          return proj_norm(*left, *right, Matrix::unflatten(x, left->dim(), right->dim()));
                        },
                    },
                    space.kind);
}

double dual_norm(const Space& space, const SparseVector& f) {
  check_support(space, f);
  return std::visit(Overloaded{
                        [&](const LpSpace& s) { return lp_norm(f, s.p.conjugate()); },
                        [&](const PolytopeSpace& s) { return s.ball->support(f); },
                        [&](const RenormedSpace& s) { return rnorm_dual(s, f); },
                        [&](const AbsoluteSumSpace& s) {
                          const auto parts = split_sum(s, f);
                          return dual_norm(*s.norm, SparseVector{{1, dual_norm(*s.left, parts.left)},
                                                                 {2, dual_norm(*s.right, parts.right)}});
                        },
                        [&](const TensorSpace& s) {
                          const auto left = to_vball(*s.left);
                          const auto right = to_vball(*s.right);
                          return bilinear_norm(*left, *right, Matrix::unflatten(f, left->dim(), right->dim()));
                        },
                    },
                    space.kind);
}

Parts split_parts(const SparseVector& x) {
  Parts parts;
  for (const auto& [i, v] : x.entries()) {
    if (i == 1) {
      parts.e1coeff = v;
    } else if (v > 0.0) {
      parts.plus.set(i, v);
    } else {
      parts.minus.set(i, -v);
    }
  }
  return parts;
}

std::shared_ptr<const VBall> to_vball(const Space& space) {
  std::call_once(space.model_once, [&] { space.model = build_model(space); });
  return space.model;
}

}  // namespace dlab
