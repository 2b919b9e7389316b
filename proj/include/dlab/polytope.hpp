#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "dlab/sparse_vector.hpp"

namespace dlab {

/// The closed slice {y in B : functional(y) >= 1 - depth}.
struct SliceSpec {
  SparseVector functional;
  double depth = 0.0;
};

struct SliceOptimum {
  double value = 0.0;
  SparseVector argmax;
  /// The open slice is empty: sup of the functional over the ball equals 1 - depth.
  bool degenerate = false;
};

inline constexpr int kMaxFacetDim = 6;
inline constexpr std::size_t kMaxFacetVertices = 24;

/// Symmetric convex body given as the convex hull of a generator list.
///
/// Extreme points and facet normals are computed on first use and cached;
/// the caches are written once under std::call_once so shared instances can
/// be queried from several threads.
class VBall {
 public:
  /// Throws kInvalidDescriptor unless the generators are negation-closed and span R^dim.
  static std::shared_ptr<const VBall> create(std::vector<SparseVector> generators, int dim);

  VBall(const VBall&) = delete;
  VBall& operator=(const VBall&) = delete;

  int dim() const { return dim_; }
  const std::vector<SparseVector>& generators() const { return generators_; }

  /// Minkowski functional, by the LP max f(x) s.t. f(v) <= 1 on extreme points.
  double gauge(const SparseVector& x) const;
  /// norm_via_facets() when the facet list is within caps, gauge() otherwise.
  double norm(const SparseVector& x) const;
  /// max over generators of <f, g>; the dual norm of f.
  double support(const SparseVector& f) const;

  /// Generators strictly separable from the others by a linear functional (LP-checked).
  const std::vector<SparseVector>& extreme_points() const;

  bool facets_within_caps() const;
  /// Vertices of the dual ball. Throws kSizeLimit beyond kMaxFacetDim / kMaxFacetVertices.
  const std::vector<SparseVector>& facet_normals() const;

  /// max <f, x> over facet normals; agrees with gauge() when the facet list is complete.
  double norm_via_facets(const SparseVector& x) const;

  /// Extreme points u != v joined by an edge: the facets through both have rank dim - 1.
  bool adjacent(const SparseVector& u, const SparseVector& v) const;

  /// Vertices of the closed slice: extreme points inside plus edge crossings of the level set.
  std::vector<SparseVector> slice_vertices(const SliceSpec& slice) const;

  /// Maximizes an objective over the closed slice. Throws kEmptySlice if the slice misses the ball.
  SliceOptimum slice_max_linear(const SliceSpec& slice, const SparseVector& objective) const;

 private:
  VBall(std::vector<SparseVector> generators, int dim);

  void check_dim(const SparseVector& x) const;

  std::vector<SparseVector> generators_;
  int dim_;

  mutable std::once_flag extreme_once_;
  mutable std::vector<SparseVector> extreme_;
  mutable std::once_flag facet_once_;
  mutable std::vector<SparseVector> facets_;
};

/// Rank of a list of vectors in R^dim (partial-pivot elimination, tolerance kTol).
int rank_of(const std::vector<SparseVector>& vectors, int dim);

}  // namespace dlab
