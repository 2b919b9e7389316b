#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "dlab/polytope.hpp"
#include "dlab/sparse_vector.hpp"

namespace dlab {

/// An l_p exponent in [1, inf]; infinity is a tag rather than a large float.
class Exponent {
 public:
  /// Throws kInvalidDescriptor unless p >= 1 and finite.
  static Exponent finite(double p);
  static Exponent infinity() { return Exponent(0.0, true); }

  bool is_infinite() const { return infinite_; }
  /// Meaningless when is_infinite().
  double value() const { return value_; }
  bool is(double p) const { return !infinite_ && value_ == p; }
  bool polyhedral() const { return infinite_ || value_ == 1.0; }
  Exponent conjugate() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

std::string to_string(Exponent p);

struct Space;
using SpacePtr = std::shared_ptr<const Space>;

struct LpSpace {
  Exponent p;
  int dim;
};

struct PolytopeSpace {
  std::shared_ptr<const VBall> ball;
};

/// Ball conv{+-(e1 + 2x) : x >= 0 on coordinates 2..n, ||x||_base <= 1}.
struct RenormedSpace {
  LpSpace base;
};

/// X (+)_N Y with N an absolute normalized norm on R^2. Coordinates of Y follow those of X.
struct AbsoluteSumSpace {
  SpacePtr norm;
  SpacePtr left;
  SpacePtr right;
};

/// Projective tensor product. Coordinate (i - 1) * dim(right) + j holds the (i, j) entry.
struct TensorSpace {
  SpacePtr left;
  SpacePtr right;
};

struct Space {
  using Kind = std::variant<LpSpace, PolytopeSpace, RenormedSpace, AbsoluteSumSpace, TensorSpace>;

  explicit Space(Kind k) : kind(std::move(k)) {}

  Kind kind;

  // Vertex model for polyhedral spaces, built on first request by to_vball().
  mutable std::once_flag model_once;
  mutable std::shared_ptr<const VBall> model;
};

SpacePtr lp_space(Exponent p, int dim);
SpacePtr polytope_space(std::vector<SparseVector> generators, int dim);
SpacePtr polytope_space(std::shared_ptr<const VBall> ball);
SpacePtr renormed_space(Exponent p, int dim);
/// Throws kInvalidDescriptor unless norm is 2-dimensional, absolute and normalized (checked by sampling).
SpacePtr absolute_sum(SpacePtr norm, SpacePtr left, SpacePtr right);
SpacePtr tensor_space(SpacePtr left, SpacePtr right);

int dim(const Space& space);
/// Canonical text rendering, e.g. "l1^3", "renorm(l2^4)", "sum[l1^2](linf^2, l1^1)".
std::string to_string(const Space& space);

/// Every norm in the family has a polytope unit ball.
bool is_polyhedral(const Space& space);

/// The space restricted to its first dim - 1 coordinates.
SpacePtr restrict_leading(const Space& space);

}  // namespace dlab
