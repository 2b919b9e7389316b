#pragma once

#include <memory>
#include <vector>

#include "dlab/polytope.hpp"

namespace dlab {

/// Dense rows x cols array with 1-based (i, j) access; flattens row-major to coordinate (i - 1) * cols + j.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0.0) {}

  double& operator()(int i, int j) { return data[static_cast<std::size_t>((i - 1) * cols + (j - 1))]; }
  double operator()(int i, int j) const { return data[static_cast<std::size_t>((i - 1) * cols + (j - 1))]; }

  SparseVector flatten() const;
  static Matrix unflatten(const SparseVector& v, int rows, int cols);

  Matrix& operator-=(const Matrix& other);
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
};

Matrix outer(const SparseVector& u, const SparseVector& v, int rows, int cols);
/// B(u, v) = sum_ij B_ij u_i v_j.
double bilinear(const Matrix& b, const SparseVector& u, const SparseVector& v);
/// max |B(u, v)| over extreme pairs: the norm of B as a bilinear form.
double bilinear_norm(const VBall& x, const VBall& y, const Matrix& b);

inline constexpr int kMaxTensorEntries = 36;

/// Projective norm via max <B, z> subject to B(u, v) <= 1 on extreme pairs. kSizeLimit past 36 entries.
double proj_norm(const VBall& x, const VBall& y, const Matrix& z);

/// Unit ball of the projective tensor product: conv{u (x) v} over extreme pairs.
std::shared_ptr<const VBall> tensor_ball(const VBall& x, const VBall& y);

/// proj_norm(x (x) y - u (x) v).
double tensor_denting_distance(const VBall& xball, const VBall& yball, const SparseVector& x, const SparseVector& y,
                               const SparseVector& u, const SparseVector& v);

struct TwoSliceResult {
  Matrix w;
  SparseVector u1;
  SparseVector v;
  bool in_slice = false;
  double dist = 0.0;
  char branch = 'a';
  /// 2 - min(||x - u1||, ||x + u1||).
  double eps_x = 0.0;
  /// 2 - ||y - v2|| in branch (b); 0 in branch (a).
  double eps_y = 0.0;
  /// B(w) after normalizing B to norm 1.
  double value = 0.0;
};

/// Two-stage slice refinement producing an elementary tensor in the slice {B > 1 - alpha}
/// far from x (x) y. B is normalized by bilinear_norm first.
TwoSliceResult two_slice_witness(const VBall& xball, const VBall& yball, const SparseVector& x,
                                 const SparseVector& y, const Matrix& b, double alpha);

}  // namespace dlab
