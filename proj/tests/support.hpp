#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "dlab/sparse_vector.hpp"

namespace testing {

using dlab::SparseVector;

inline SparseVector e(int i, double v = 1.0) { return SparseVector::unit(i, v); }

inline SparseVector gaussian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  SparseVector v;
  for (int i = 1; i <= n; ++i) v.set(i, g(rng));
  return v;
}

/// Nonnegative vector on coordinates lo..hi with entries uniform in [0, 1).
inline SparseVector positive(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SparseVector v;
  for (int i = lo; i <= hi; ++i) v.set(i, u(rng));
  return v;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double pnorm(const SparseVector& v, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& [i, x] : v.entries()) m = std::max(m, std::abs(x));
    return m;
  }
  double s = 0.0;
  for (const auto& [i, x] : v.entries()) s += std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

/// Extreme points of a planar point set (monotone chain, collinear points dropped).
inline std::vector<SparseVector> hull_2d(std::vector<SparseVector> pts) {
  std::sort(pts.begin(), pts.end(), [](const SparseVector& a, const SparseVector& b) {
    return a[1] != b[1] ? a[1] < b[1] : a[2] < b[2];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto cross = [](const SparseVector& o, const SparseVector& a, const SparseVector& b) {
    return (a[1] - o[1]) * (b[2] - o[2]) - (a[2] - o[2]) * (b[1] - o[1]);
  };
  std::vector<SparseVector> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 1e-12) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 1e-12) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

/// max ||x - y|| over {y in conv(points) : f(y) >= level}: points inside, plus the level
/// crossing of every segment from an inside point to an outside one.
inline double slice_sup_oracle(const std::vector<SparseVector>& points, const SparseVector& x,
                               const SparseVector& f, double level,
                               const std::function<double(const SparseVector&)>& norm) {
  double best = -1.0;
  for (const auto& p : points) {
    const double fp = dlab::pairing(f, p);
    if (fp < level) continue;
    best = std::max(best, norm(x - p));
    for (const auto& q : points) {
      const double fq = dlab::pairing(f, q);
      if (fq >= level) continue;
      const double t = (fp - level) / (fp - fq);
      best = std::max(best, norm(x - (p + t * (q - p))));
    }
  }
  return best;
}

}  // namespace testing
