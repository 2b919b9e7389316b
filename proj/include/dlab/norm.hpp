#pragma once

#include <memory>

#include "dlab/space.hpp"

namespace dlab {

double lp_norm(const SparseVector& x, Exponent p);

/// Norm of x in the described space. Throws kOutOfDimension if x leaves 1..dim.
double norm(const Space& space, const SparseVector& x);
/// Dual norm sup{f(x) : norm(x) <= 1}.
double dual_norm(const Space& space, const SparseVector& f);

struct Parts {
  double e1coeff = 0.0;
  SparseVector plus;
  SparseVector minus;
};

/// x = e1coeff e1 + plus - minus with plus, minus >= 0 off coordinate 1.
Parts split_parts(const SparseVector& x);

/// Vertex model of a polyhedral space; throws kNotPolyhedral otherwise.
std::shared_ptr<const VBall> to_vball(const Space& space);

void check_support(const Space& space, const SparseVector& x);

}  // namespace dlab
