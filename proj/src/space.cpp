#include "dlab/space.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "dlab/error.hpp"
#include "dlab/norm.hpp"

namespace dlab {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

SpacePtr make(Space::Kind kind) { return std::make_shared<const Space>(std::move(kind)); }

void require_dim(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidDescriptor, "dimension must be positive, got " + std::to_string(n));
}

void require_space(const SpacePtr& s, const char* what) {
  if (!s) throw Error(ErrorCode::kInvalidDescriptor, std::string("missing ") + what + " space");
}

// Section of a polytope ball by the hyperplane x_n = 0, via the truncated dual vertices.
SpacePtr section(const VBall& ball) {
  const int n = ball.dim();
  std::vector<SparseVector> truncated;
  for (auto f : ball.facet_normals()) {
    f.set(n, 0.0);
    if (!f.empty()) truncated.push_back(std::move(f));
  }
  const auto dual = VBall::create(std::move(truncated), n - 1);
  return polytope_space(dual->facet_normals(), n - 1);
}

}  // namespace

Exponent Exponent::finite(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::kInvalidDescriptor, "exponent must lie in [1, inf)");
  }
  return Exponent(p, false);
}

Exponent Exponent::conjugate() const {
  if (infinite_) return finite(1.0);
  if (value_ == 1.0) return infinity();
  return finite(value_ / (value_ - 1.0));
}

std::string to_string(Exponent p) {
  if (p.is_infinite()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p.value());
  return buf;
}

SpacePtr lp_space(Exponent p, int dim) {
  require_dim(dim);
  return make(LpSpace{p, dim});
}

SpacePtr polytope_space(std::vector<SparseVector> generators, int dim) {
  return make(PolytopeSpace{VBall::create(std::move(generators), dim)});
}

SpacePtr polytope_space(std::shared_ptr<const VBall> ball) {
  if (!ball) throw Error(ErrorCode::kInvalidDescriptor, "missing ball");
  return make(PolytopeSpace{std::move(ball)});
}

SpacePtr renormed_space(Exponent p, int dim) {
  require_dim(dim);
  return make(RenormedSpace{LpSpace{p, dim}});
}

SpacePtr absolute_sum(SpacePtr norm2d, SpacePtr left, SpacePtr right) {
  require_space(norm2d, "norm");
  require_space(left, "left");
  require_space(right, "right");
  if (dim(*norm2d) != 2) {
    throw Error(ErrorCode::kInvalidDescriptor, "sum norm must be 2-dimensional, got " + to_string(*norm2d));
  }
  auto fail = [&](const char* why) {
    throw Error(ErrorCode::kInvalidDescriptor, "sum norm " + to_string(*norm2d) + " is not " + why);
  };
  if (std::abs(norm(*norm2d, SparseVector{{1, 1.0}}) - 1.0) > kTol ||
      std::abs(norm(*norm2d, SparseVector{{2, 1.0}}) - 1.0) > kTol) {
    fail("normalized");
  }
  constexpr int kSamples = 24;
  for (int k = 0; k < kSamples; ++k) {
    const double t = (k + 0.5) * std::numbers::pi / (2 * kSamples);
    const double a = std::cos(t);
    const double b = std::sin(t);
    const double base = norm(*norm2d, SparseVector{{1, a}, {2, b}});
    for (auto [sa, sb] : {std::pair{-1.0, 1.0}, {1.0, -1.0}, {-1.0, -1.0}}) {
      if (std::abs(norm(*norm2d, SparseVector{{1, sa * a}, {2, sb * b}}) - base) > kTol * (1.0 + base)) {
        fail("absolute");
      }
    }
  }
  return make(AbsoluteSumSpace{std::move(norm2d), std::move(left), std::move(right)});
}

SpacePtr tensor_space(SpacePtr left, SpacePtr right) {
  require_space(left, "left");
  require_space(right, "right");
  return make(TensorSpace{std::move(left), std::move(right)});
}

int dim(const Space& space) {
  return std::visit(Overloaded{
                        [](const LpSpace& s) { return s.dim; },
                        [](const PolytopeSpace& s) { return s.ball->dim(); },
                        [](const RenormedSpace& s) { return s.base.dim; },
                        [](const AbsoluteSumSpace& s) { return dim(*s.left) + dim(*s.right); },
                        [](const TensorSpace& s) { return dim(*s.left) * dim(*s.right); },
                    },
                    space.kind);
}

std::string to_string(const Space& space) {
  auto lp_text = [](const LpSpace& s) { return "l" + to_string(s.p) + "^" + std::to_string(s.dim); };
  return std::visit(Overloaded{
                        lp_text,
                        [](const PolytopeSpace& s) {
                          return "polytope^" + std::to_string(s.ball->dim()) + "[" +
                                 std::to_string(s.ball->generators().size()) + "]";
                        },
                        [&](const RenormedSpace& s) { return "renorm(" + lp_text(s.base) + ")"; },
                        [](const AbsoluteSumSpace& s) {
                          return "sum[" + to_string(*s.norm) + "](" + to_string(*s.left) + ", " +
                                 to_string(*s.right) + ")";
                        },
                        [](const TensorSpace& s) {
                          return "tensor(" + to_string(*s.left) + ", " + to_string(*s.right) + ")";
                        },
                    },
                    space.kind);
}

bool is_polyhedral(const Space& space) {
  return std::visit(Overloaded{
                        [](const LpSpace& s) { return s.p.polyhedral() || s.dim == 1; },
                        [](const PolytopeSpace&) { return true; },
                        [](const RenormedSpace& s) { return s.base.p.polyhedral() || s.base.dim <= 2; },
                        [](const AbsoluteSumSpace& s) {
                          return is_polyhedral(*s.norm) && is_polyhedral(*s.left) && is_polyhedral(*s.right);
                        },
                        [](const TensorSpace& s) { return is_polyhedral(*s.left) && is_polyhedral(*s.right); },
                    },
                    space.kind);
}

SpacePtr restrict_leading(const Space& space) {
  if (dim(space) < 2) throw Error(ErrorCode::kInvalidDescriptor, "cannot restrict a 1-dimensional space");
  return std::visit(Overloaded{
                        [](const LpSpace& s) { return lp_space(s.p, s.dim - 1); },
                        [](const PolytopeSpace& s) { return section(*s.ball); },
                        [](const RenormedSpace& s) { return renormed_space(s.base.p, s.base.dim - 1); },
                        [](const AbsoluteSumSpace& s) {
                          if (dim(*s.right) == 1) return s.left;
                          return absolute_sum(s.norm, s.left, restrict_leading(*s.right));
                        },
                        [&](const TensorSpace&) { return section(*to_vball(space)); },
                    },
                    space.kind);
}

}  // namespace dlab
