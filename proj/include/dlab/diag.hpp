#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dlab/space.hpp"

namespace dlab {

enum class Property { kNabla, kDPoint, kDeltaDeficiency, kDaugavet, kStronglyExposed };
enum class Verdict { kHolds, kFails, kLowerBoundOnly };

const char* to_string(Property property);
const char* to_string(Verdict verdict);

struct Witness {
  SparseVector vector;
  SparseVector functional;
  double achieved = 0.0;
};

struct DiagnosticParams {
  std::optional<double> alpha;
  std::optional<double> eps;
  std::size_t sweep_size = 0;
  std::size_t samples = 0;
};

struct DiagnosticReport {
  Property property = Property::kNabla;
  Verdict verdict = Verdict::kLowerBoundOnly;
  double deficiency = 0.0;
  std::optional<Witness> witness;
  DiagnosticParams params;
  std::vector<DiagnosticReport> parts;
};

inline constexpr double kDefaultEps = 1e-6;
inline constexpr std::array<double, 4> kAlphaGrid{0.5, 0.25, 0.1, 0.01};
inline constexpr std::size_t kQuadrantSamples = 64;
inline constexpr std::size_t kRenormSamples = 64;

/// max ||x - y|| over the closed slice, as max over facet normals g of g(x) + max_slice(-g).
/// Polyhedral spaces only.
double slice_sup(const Space& space, const SparseVector& x, const SliceSpec& slice);

/// Lower bound on slice_sup from a finite set of ball points: the points inside the slice
/// and the level crossings of segments joining an inside point to an outside one.
double slice_sup_sampled(const Space& space, const SparseVector& x, const SliceSpec& slice,
                         const std::vector<SparseVector>& ball_points);

struct DentingInfimum {
  /// inf ||x - v|| over denting points v != x; exact when `exact`, otherwise an upper bound.
  double value = 0.0;
  SparseVector witness;
  bool exact = true;
  std::size_t sweep = 0;
};

/// Polyhedral spaces sweep the extreme list. l_p spheres, sums and sampled renormed balls
/// are handled by recursion over the extreme structure of the parts.
DentingInfimum denting_infimum(const Space& space, const SparseVector& x);

/// Holds iff ||x - v|| >= 2 - eps for every denting point v != x. Throws kNotOnSphere.
DiagnosticReport nabla_check(const Space& space, const SparseVector& x, double eps = kDefaultEps);

/// Facet normals attaining 1 at x, then their pairwise midpoints, then their barycenter (deduplicated).
std::vector<SparseVector> supporting_candidates(const Space& space, const SparseVector& x);

DiagnosticReport strongly_exposed_check(const Space& space, const SparseVector& x);
DiagnosticReport dpoint_deficiency(const Space& space, const SparseVector& x, double alpha);
/// Never Holds: finite-dimensional balls have no Daugavet points.
DiagnosticReport daugavet_check(const Space& space, const SparseVector& x, double alpha, double eps = kDefaultEps);

/// Edge midpoints in extreme-list order first, then seeded random sphere samples.
/// Throws kSearchExhausted if nothing fails nabla_check.
SparseVector find_non_nabla(const Space& space, std::size_t samples, std::uint64_t seed = 1);

struct Refinement {
  SparseVector vertex;
  SliceSpec slice;
  double min_vertex_distance = 0.0;
};

/// Takes the extreme point v of the slice farthest from x; if it is at distance >= 2 - eps, returns the
/// slice exposed at v with depth eps/2 (halved until it fits inside the original slice).
std::optional<Refinement> refine_slice(const Space& space, const SparseVector& x, const SliceSpec& slice,
                                       double eps);

}  // namespace dlab
