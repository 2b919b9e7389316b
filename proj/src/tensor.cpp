#include "dlab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dlab/error.hpp"
#include "dlab/lp.hpp"

namespace dlab {

namespace {

// Row functional u -> B(u, v).
SparseVector left_functional(const Matrix& b, const SparseVector& v) {
  SparseVector f;
  for (int i = 1; i <= b.rows; ++i) {
    double s = 0.0;
    for (const auto& [j, vj] : v.entries()) s += b(i, j) * vj;
    f.set(i, s);
  }
  return f;
}

SparseVector right_functional(const Matrix& b, const SparseVector& u) {
  SparseVector f;
  for (int j = 1; j <= b.cols; ++j) {
    double s = 0.0;
    for (const auto& [i, ui] : u.entries()) s += b(i, j) * ui;
    f.set(j, s);
  }
  return f;
}

}  // namespace

SparseVector Matrix::flatten() const { return SparseVector::from_dense(data); }

Matrix Matrix::unflatten(const SparseVector& v, int rows, int cols) {
  Matrix m(rows, cols);
  if (v.max_index() > rows * cols) {
    throw Error(ErrorCode::kOutOfDimension, to_string(v) + " exceeds " + std::to_string(rows) + "x" +
                                                std::to_string(cols));
  }
  for (const auto& [k, val] : v.entries()) m.data[static_cast<std::size_t>(k - 1)] = val;
  return m;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows != other.rows || cols != other.cols) throw Error(ErrorCode::kOutOfDimension, "matrix shape mismatch");
  for (std::size_t k = 0; k < data.size(); ++k) data[k] -= other.data[k];
  return *this;
}

Matrix outer(const SparseVector& u, const SparseVector& v, int rows, int cols) {
  if (u.max_index() > rows || v.max_index() > cols) throw Error(ErrorCode::kOutOfDimension, "factor out of shape");
  Matrix m(rows, cols);
  for (const auto& [i, ui] : u.entries()) {
    for (const auto& [j, vj] : v.entries()) m(i, j) = ui * vj;
  }
  return m;
}

double bilinear(const Matrix& b, const SparseVector& u, const SparseVector& v) {
  double s = 0.0;
  for (const auto& [i, ui] : u.entries()) {
    if (i > b.rows) throw Error(ErrorCode::kOutOfDimension, "left argument out of shape");
    for (const auto& [j, vj] : v.entries()) {
      if (j > b.cols) throw Error(ErrorCode::kOutOfDimension, "right argument out of shape");
      s += b(i, j) * ui * vj;
    }
  }
  return s;
}

double bilinear_norm(const VBall& x, const VBall& y, const Matrix& b) {
  double best = 0.0;
  for (const auto& u : x.extreme_points()) {
    for (const auto& v : y.extreme_points()) best = std::max(best, std::abs(bilinear(b, u, v)));
  }
  return best;
}

double proj_norm(const VBall& x, const VBall& y, const Matrix& z) {
  const int n = x.dim();
  const int m = y.dim();
  if (z.rows != n || z.cols != m) throw Error(ErrorCode::kOutOfDimension, "tensor shape does not match factors");
  if (n * m > kMaxTensorEntries) {
    throw Error(ErrorCode::kSizeLimit, "projective norm capped at " + std::to_string(kMaxTensorEntries) +
                                           " entries, got " + std::to_string(n * m));
  }
  lp::LinearProgram program(z.data);
  for (const auto& u : x.extreme_points()) {
    for (const auto& v : y.extreme_points()) program.add(outer(u, v, n, m).data, lp::Relation::kLessEqual, 1.0);
  }
  const auto sol = lp::solve(program);
  if (sol.status != lp::Status::kOptimal) throw Error(ErrorCode::kNumerical, "projective norm LP not optimal");
  return sol.value;
}

std::shared_ptr<const VBall> tensor_ball(const VBall& x, const VBall& y) {
  std::vector<SparseVector> gens;
  for (const auto& u : x.extreme_points()) {
    for (const auto& v : y.extreme_points()) {
      auto g = outer(u, v, x.dim(), y.dim()).flatten();
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
    }
  }
  return VBall::create(std::move(gens), x.dim() * y.dim());
}

double tensor_denting_distance(const VBall& xball, const VBall& yball, const SparseVector& x, const SparseVector& y,
                               const SparseVector& u, const SparseVector& v) {
  const int n = xball.dim();
  const int m = yball.dim();
  return proj_norm(xball, yball, outer(x, y, n, m) - outer(u, v, n, m));
}

TwoSliceResult two_slice_witness(const VBall& xball, const VBall& yball, const SparseVector& x,
                                 const SparseVector& y, const Matrix& b_in, double alpha) {
  const int n = xball.dim();
  const int m = yball.dim();
  const double scale = bilinear_norm(xball, yball, b_in);
  if (scale <= kTol) throw Error(ErrorCode::kEmptySlice, "zero bilinear form defines no slice");
  Matrix b = b_in;
  for (auto& entry : b.data) entry /= scale;

  SparseVector x0;
  SparseVector y0;
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& u : xball.extreme_points()) {
    for (const auto& v : yball.extreme_points()) {
      const double val = bilinear(b, u, v);
      if (val > top) {
        top = val;
        x0 = u;
        y0 = v;
      }
    }
  }

  // S1 = {u : B(u, y0) > sup B(., y0) - alpha/4}; pick u1 in S1 far from +-x.
  const auto f1 = left_functional(b, y0);
  const double level1 = xball.support(f1) - alpha / 4.0;
  TwoSliceResult out;
  double best = -1.0;
  for (const auto& u : xball.extreme_points()) {
    if (pairing(f1, u) <= level1) continue;
    const double d = std::min(xball.norm(x - u), xball.norm(x + u));
    if (d > best) {
      best = d;
      out.u1 = u;
    }
  }
  out.eps_x = 2.0 - best;

  // S2 = {v : B(u1, v) > sup B(u1, .) - alpha/4}.
  const auto f2 = right_functional(b, out.u1);
  const double level2 = yball.support(f2) - alpha / 4.0;
  if (pairing(f2, y) > level2) {
    out.branch = 'a';
    out.v = y;
  } else {
    out.branch = 'b';
    double far = -1.0;
    for (const auto& v : yball.extreme_points()) {
      if (pairing(f2, v) <= level2) continue;
      const double d = yball.norm(y - v);
      if (d > far) {
        far = d;
        out.v = v;
      }
    }
    out.eps_y = 2.0 - far;
  }
  out.w = outer(out.u1, out.v, n, m);
  out.value = bilinear(b, out.u1, out.v);
  out.in_slice = out.value > 1.0 - alpha;
  out.dist = proj_norm(xball, yball, outer(x, y, n, m) - out.w);
  return out;
}

}  // namespace dlab
