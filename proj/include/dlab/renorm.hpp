#pragma once

#include <memory>
#include <vector>

#include "dlab/space.hpp"

namespace dlab {

/// max{|x1|, |x1 - ||x+||, |x1 + ||x-||, (||x+|| + ||x-||)/2}, base norms on the parts of x - x1 e1.
double rnorm(const RenormedSpace& space, const SparseVector& x);
/// max{|f1 + 2||f+||*|, |f1 - 2||f-||*|} with the conjugate base norm.
double rnorm_dual(const RenormedSpace& space, const SparseVector& f);

/// z* = lambda (e1* - y*) + (1 - lambda)/2 (x* - y*) with x*, y* >= 0 off coordinate 1,
/// disjoint supports, and conjugate base norm at most 1.
struct DualDecomposition {
  double lambda = 0.0;
  SparseVector xstar;
  SparseVector ystar;
};

/// Throws kNegativeFirstCoordinate if z*(e1) < 0 and kNotInBall if rnorm_dual(z*) > 1.
DualDecomposition decompose_dual(const RenormedSpace& space, const SparseVector& zstar);
SparseVector recompose(const DualDecomposition& d);

/// w = z + 2 lambda a e_k with rnorm(e1 - w) = 2.
/// Throws kBadIndex if k == 1 or k is in the support of z, kOutOfDimension if k > n.
SparseVector primal_witness(const RenormedSpace& space, const SparseVector& z, int k);

/// w* = z* + (1 - lambda)/2 a e*_{2k} - (1 + lambda)/2 b e*_{2k+1} with rnorm_dual(e1* -+ w*) = 2.
SparseVector dual_witness(const RenormedSpace& space, const SparseVector& zstar, int k);

/// l1^2 sum of the leading dim - 1 coordinates with a trailing real line; its last unit vector is a nabla point.
SpacePtr corner_renorm(const Space& space);

/// For f = e1* - g with g >= 0 off coordinate 1: 1 - sup of f over the extreme points other than e1,
/// which is min(2, 2 min_j g_j, 2 - 2||g||*).
double exposure_margin(const RenormedSpace& space, const SparseVector& g);

/// Extreme points +-e1 and +-(e1 + 2w) for w among: unit vectors, the normalized parts of `hint`,
/// the normalized all-ones vector, and `random_count` seeded random nonnegative directions.
std::vector<SparseVector> sample_extreme_points(const RenormedSpace& space, const SparseVector& hint,
                                                std::size_t random_count);

/// Vertex list of the renormed ball for base l1 or l_inf; kNotPolyhedral otherwise.
std::shared_ptr<const VBall> renorm_generators(const RenormedSpace& space);

}  // namespace dlab
