#pragma once

#include <memory>

#include "dlab/space.hpp"

namespace dlab {

/// A point of X (+)_N Y as its two components, each in its own 1-based coordinates.
struct SumPoint {
  SparseVector left;
  SparseVector right;
};

SumPoint split_sum(const AbsoluteSumSpace& sum, const SparseVector& x);
SparseVector embed_sum(const AbsoluteSumSpace& sum, const SumPoint& p);

/// N(||left||, ||right||).
double sum_norm(const AbsoluteSumSpace& sum, const SumPoint& p);

/// Points (a u, b v) with (a, b) extreme in the positive quadrant of B_N and u, v extreme in the parts.
/// Throws kNotPolyhedral unless N and both parts are polyhedral.
std::shared_ptr<const VBall> sum_ball(const AbsoluteSumSpace& sum);

/// Extreme points of B_N in the closed positive quadrant, zero excluded. N must be polyhedral.
std::vector<SparseVector> quadrant_extremes(const Space& norm2d);

struct VerdictPair {
  bool lhs = false;
  bool rhs = false;
};

/// lhs: x is a nabla point of X; rhs: (x, 0) is a nabla point of X (+)_1 Y.
VerdictPair check_l1_transfer(const SpacePtr& x_space, const SparseVector& x, const SpacePtr& y_space);

/// lhs: (x, y) is a nabla point of X (+)_inf Y; rhs: x and y are both nabla points.
/// Points off the unit sphere count as not nabla.
VerdictPair check_linf_characterization(const SpacePtr& x_space, const SparseVector& x, const SpacePtr& y_space,
                                        const SparseVector& y);

}  // namespace dlab
