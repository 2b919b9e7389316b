#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dlab/diag.hpp"
#include "dlab/error.hpp"
#include "dlab/norm.hpp"
#include "support.hpp"

using namespace dlab;
using testing::e;

namespace {

const auto one = Exponent::finite(1.0);
const auto two = Exponent::finite(2.0);
const auto inf = Exponent::infinity();

SpacePtr hexagon() {
  return polytope_space({e(1), e(1, -1.0), e(2), e(2, -1.0), e(1) + e(2), -(e(1) + e(2))}, 2);
}

SpacePtr random_polytope(std::mt19937_64& rng, int dim, int pairs) {
  std::vector<SparseVector> g;
  for (int i = 0; i < pairs; ++i) {
    auto v = testing::gaussian(rng, dim);
    v *= 1.0 / testing::pnorm(v, 2.0);
    g.push_back(v);
    g.push_back(-v);
  }
  return polytope_space(g, dim);
}

std::vector<SpacePtr> battery() {
  std::mt19937_64 rng(127);
  return {lp_space(one, 2),
          lp_space(one, 3),
          lp_space(inf, 2),
          lp_space(inf, 3),
          renormed_space(one, 3),
          renormed_space(inf, 3),
          renormed_space(two, 2),
          hexagon(),
          random_polytope(rng, 2, 5),
          random_polytope(rng, 3, 5),
          absolute_sum(lp_space(one, 2), lp_space(inf, 2), lp_space(one, 1)),
          absolute_sum(lp_space(inf, 2), lp_space(one, 2), lp_space(one, 1))};
}

// Extreme points, midpoints of adjacent pairs pushed to the sphere, and a few random sphere points.
std::vector<SparseVector> sphere_points(const Space& s, std::mt19937_64& rng) {
  const auto b = to_vball(s);
  std::vector<SparseVector> out = b->extreme_points();
  const auto& ext = b->extreme_points();
  for (std::size_t i = 0; i < ext.size(); ++i) {
    for (std::size_t j = i + 1; j < ext.size(); ++j) {
      if (b->adjacent(ext[i], ext[j])) out.push_back(0.5 * (ext[i] + ext[j]));
    }
  }
  for (int k = 0; k < 5; ++k) {
    const auto g = testing::gaussian(rng, dim(s));
    out.push_back((1.0 / norm(s, g)) * g);
  }
  return out;
}

double model_norm_distance(const Space& s, const SparseVector& a, const SparseVector& b) { return norm(s, a - b); }

}  // namespace

TEST_CASE("slice sup examples") {
  const auto l1 = lp_space(one, 3);
  CHECK(slice_sup(*l1, e(1), {e(1), 0.1}) == doctest::Approx(0.2));
  CHECK(slice_sup(*l1, e(1), {e(2), 0.5}) == doctest::Approx(2.0));
  CHECK(slice_sup(*lp_space(inf, 2), e(1) + e(2), {e(1, -1.0), 0.25}) == doctest::Approx(2.0));
}

TEST_CASE("slice sup agrees with an independent vertex sweep") {
  std::mt19937_64 rng(131);
  for (const auto& s : battery()) {
    const auto& ext = to_vball(*s)->extreme_points();
    for (int k = 0; k < 10; ++k) {
      const auto x = sphere_points(*s, rng)[static_cast<std::size_t>(k) % ext.size()];
      auto f = testing::gaussian(rng, dim(*s));
      f *= 1.0 / dual_norm(*s, f);
      double prev = -1.0;
      for (double alpha : {0.01, 0.1, 0.25, 0.5, 1.0}) {
        const double got = slice_sup(*s, x, {f, alpha});
        const double oracle = testing::slice_sup_oracle(
            ext, x, f, 1.0 - alpha, [&](const SparseVector& d) { return norm(*s, d); });
        CHECK(got == doctest::Approx(oracle).epsilon(1e-9));
        CHECK(got >= prev - kTol);
        CHECK(got <= 2.0 + kTol);
        if (pairing(f, -x) >= 1.0 - alpha) CHECK(got >= 2.0 - kTol);
        prev = got;
      }
    }
  }
}

TEST_CASE("nabla examples") {
  auto r = nabla_check(*lp_space(one, 3), e(1));
  CHECK(r.verdict == Verdict::kHolds);
  CHECK(r.deficiency == doctest::Approx(0.0));

  r = nabla_check(*lp_space(one, 2), 0.5 * (e(1) + e(2)));
  CHECK(r.verdict == Verdict::kFails);
  CHECK(r.deficiency == doctest::Approx(1.0));
  REQUIRE(r.witness);
  CHECK(((r.witness->vector == e(1)) || (r.witness->vector == e(2))));

  r = nabla_check(*lp_space(inf, 2), e(1));
  CHECK(r.verdict == Verdict::kFails);
  CHECK(r.deficiency == doctest::Approx(1.0));
  REQUIRE(r.witness);
  CHECK(std::abs(r.witness->vector[1] - 1.0) <= kTol);
  CHECK(std::abs(std::abs(r.witness->vector[2]) - 1.0) <= kTol);

  try {
    nabla_check(*lp_space(one, 2), e(1, 0.5));
    FAIL("expected kNotOnSphere");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kNotOnSphere);
  }
}

TEST_CASE("nabla verdict matches a brute-force extreme point sweep") {
  std::mt19937_64 rng(137);
  for (const auto& s : battery()) {
    const auto& ext = to_vball(*s)->extreme_points();
    for (const auto& x : sphere_points(*s, rng)) {
      double best = 1e300;
      for (const auto& v : ext) {
        if (max_abs_diff(v, x) <= kTol) continue;
        best = std::min(best, model_norm_distance(*s, x, v));
      }
      const auto r = nabla_check(*s, x);
      CHECK(r.deficiency == doctest::Approx(2.0 - best).epsilon(1e-9));
      CHECK((r.verdict == Verdict::kHolds) == (best >= 2.0 - kDefaultEps));
    }
  }
}

TEST_CASE("non-polyhedral spaces") {
  // Every other point of the Euclidean sphere is at distance below 2 from some nearby sphere point.
  auto r = nabla_check(*lp_space(two, 3), e(1));
  CHECK(r.verdict == Verdict::kFails);
  CHECK(r.deficiency > 0.0);
  r = nabla_check(*renormed_space(two, 4), e(4));
  CHECK(r.verdict != Verdict::kHolds);
}

TEST_CASE("strongly exposed examples") {
  auto r = strongly_exposed_check(*lp_space(one, 3), e(1));
  CHECK(r.verdict == Verdict::kHolds);
  REQUIRE(r.witness);
  CHECK(r.witness->achieved == doctest::Approx(1.0));
  CHECK(pairing(r.witness->functional, e(1)) == doctest::Approx(1.0));

  CHECK(strongly_exposed_check(*lp_space(one, 2), 0.5 * (e(1) + e(2))).verdict == Verdict::kFails);

  r = strongly_exposed_check(*renormed_space(one, 3), e(1));
  CHECK(r.verdict == Verdict::kHolds);
  REQUIRE(r.witness);
  CHECK(max_abs_diff(r.witness->functional, e(1) - e(2, 0.5) - e(3, 0.5)) <= 1e-9);
  CHECK(r.witness->achieved == doctest::Approx(1.0));
}

TEST_CASE("nabla points of polyhedral spaces are strongly exposed") {
  std::mt19937_64 rng(139);
  int nabla = 0;
  for (const auto& s : battery()) {
    for (const auto& x : sphere_points(*s, rng)) {
      if (nabla_check(*s, x).verdict != Verdict::kHolds) continue;
      ++nabla;
      CHECK(strongly_exposed_check(*s, x).verdict == Verdict::kHolds);
    }
  }
  CHECK(nabla > 10);
}

TEST_CASE("dpoint examples") {
  auto r = dpoint_deficiency(*lp_space(one, 3), e(1), 0.1);
  CHECK(r.verdict == Verdict::kFails);
  REQUIRE(r.witness);
  CHECK(max_abs_diff(r.witness->functional, e(1)) <= 1e-9);
  CHECK(r.witness->achieved == doctest::Approx(0.2));

  r = dpoint_deficiency(*lp_space(inf, 2), e(1) + e(2), 0.25);
  CHECK(r.verdict == Verdict::kFails);
  REQUIRE(r.witness);
  CHECK(pairing(r.witness->functional, e(1) + e(2)) == doctest::Approx(1.0));

  r = dpoint_deficiency(*lp_space(one, 2), e(2), 0.5);
  CHECK(r.verdict == Verdict::kFails);
  REQUIRE(r.witness);
  CHECK(max_abs_diff(r.witness->functional, e(2)) <= 1e-9);
  CHECK(r.witness->achieved == doctest::Approx(1.0));
}

TEST_CASE("dpoint witnesses lie in the subdifferential") {
  std::mt19937_64 rng(149);
  for (const auto& s : battery()) {
    for (const auto& x : sphere_points(*s, rng)) {
      for (double alpha : kAlphaGrid) {
        const auto r = dpoint_deficiency(*s, x, alpha);
        CHECK(r.verdict != Verdict::kHolds);
        if (r.verdict != Verdict::kFails) continue;
        REQUIRE(r.witness);
        CHECK(dual_norm(*s, r.witness->functional) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(pairing(r.witness->functional, x) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(r.witness->achieved < 2.0 - kTol);
      }
    }
  }
}

TEST_CASE("daugavet examples") {
  auto r = daugavet_check(*lp_space(one, 3), e(1), 0.1);
  CHECK(r.verdict == Verdict::kFails);
  REQUIRE(r.parts.size() == 2);
  CHECK(r.parts[0].verdict == Verdict::kHolds);
  CHECK(r.parts[1].verdict == Verdict::kFails);

  r = daugavet_check(*lp_space(one, 2), 0.5 * (e(1) + e(2)), 0.1);
  CHECK(r.verdict == Verdict::kFails);
  CHECK(r.parts[0].verdict == Verdict::kFails);

  r = daugavet_check(*lp_space(inf, 2), e(1), 0.1);
  CHECK(r.verdict == Verdict::kFails);
  CHECK(r.parts[0].verdict == Verdict::kFails);
}

TEST_CASE("daugavet verdict is the conjunction of its parts") {
  std::mt19937_64 rng(151);
  for (const auto& s : battery()) {
    for (const auto& x : sphere_points(*s, rng)) {
      const auto r = daugavet_check(*s, x, 0.25);
      REQUIRE(r.parts.size() == 2);
      CHECK(r.parts[0].property == Property::kNabla);
      CHECK(r.parts[1].property == Property::kDPoint);
      const bool any_fail = r.parts[0].verdict == Verdict::kFails || r.parts[1].verdict == Verdict::kFails;
      CHECK(r.verdict == (any_fail ? Verdict::kFails : Verdict::kLowerBoundOnly));
      CHECK(r.verdict != Verdict::kHolds);
    }
  }
}

TEST_CASE("nabla deficiency is stable along convergent sequences") {
  std::mt19937_64 rng(157);
  for (const auto& s : battery()) {
    for (const auto& x : sphere_points(*s, rng)) {
      const double limit = nabla_check(*s, x).deficiency;
      const auto d = testing::gaussian(rng, dim(*s));
      for (double t : {0.1, 0.01, 0.001, 1e-4}) {
        auto xk = x + t * d;
        xk *= 1.0 / norm(*s, xk);
        const double dk = nabla_check(*s, xk).deficiency;
        CHECK(limit <= dk + 2.0 * norm(*s, x - xk) + 1e-9);
      }
    }
  }
}

TEST_CASE("find non-nabla examples") {
  CHECK(max_abs_diff(find_non_nabla(*lp_space(one, 2), 10), 0.5 * (e(1) + e(2))) <= kTol);
  const auto sq = find_non_nabla(*lp_space(inf, 2), 10);
  CHECK(std::abs(std::abs(sq[1]) + std::abs(sq[2]) - 1.0) <= kTol);
  CHECK(nabla_check(*lp_space(inf, 2), sq).verdict == Verdict::kFails);
  const auto edge = polytope_space({e(1), e(1, -1.0), e(1) + e(2, 2.0), -(e(1) + e(2, 2.0))}, 2);
  CHECK(max_abs_diff(find_non_nabla(*edge, 10), e(1) + e(2)) <= kTol);
  for (const auto& s : battery()) CHECK(nabla_check(*s, find_non_nabla(*s, 100)).verdict == Verdict::kFails);
}

TEST_CASE("slice refinement examples") {
  const auto s = lp_space(one, 3);
  const auto r = refine_slice(*s, e(1), {e(1, -1.0) + e(2, 0.5), 0.6}, 0.1);
  REQUIRE(r);
  CHECK(r->vertex == e(1, -1.0));
  CHECK(r->min_vertex_distance == doctest::Approx(2.0));
  // Only x itself is an extreme point of this slice.
  CHECK_FALSE(refine_slice(*s, e(1), {e(1), 0.9}, 0.1));
}

TEST_CASE("slice refinement on l1 spaces keeps far vertices far") {
  std::mt19937_64 rng(163);
  int refined = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto s = lp_space(one, n);
    const auto b = to_vball(*s);
    for (int k = 0; k < 40; ++k) {
      const auto& ext = b->extreme_points();
      const auto x = ext[rng() % ext.size()];
      auto f = testing::gaussian(rng, n);
      f *= 1.0 / dual_norm(*s, f);
      const double eps = kAlphaGrid[static_cast<std::size_t>(k) % kAlphaGrid.size()];
      const SliceSpec slice{f, testing::uniform(rng, 0.05, 1.0)};
      if (slice_sup(*s, x, slice) < 2.0 - eps) continue;
      const auto r = refine_slice(*s, x, slice, eps);
      const bool other_vertex = std::any_of(ext.begin(), ext.end(), [&](const SparseVector& v) {
        return v != x && pairing(f, v) >= 1.0 - slice.depth - kTol;
      });
      // Distinct extreme points of l1 are at distance 2, so any other extreme point in the slice will do.
      REQUIRE(r.has_value() == other_vertex);
      if (!r) continue;
      ++refined;
      CHECK(pairing(slice.functional, r->vertex) >= 1.0 - slice.depth - kTol);
      CHECK(pairing(r->slice.functional, r->vertex) == doctest::Approx(1.0));
      CHECK(r->min_vertex_distance >= 2.0 - 2.0 * eps - kTol);
      for (const auto& v : b->slice_vertices(r->slice)) {
        CHECK(pairing(slice.functional, v) >= 1.0 - slice.depth - kTol);
        CHECK(norm(*s, x - v) >= 2.0 - 2.0 * eps - kTol);
      }
    }
  }
  CHECK(refined > 20);
}

TEST_CASE("cube vertices keep distance 2 on every supporting slice of depth one half") {
  const auto s = lp_space(inf, 4);
  const auto x = e(1) + e(2) + e(3) + e(4);
  const auto r = dpoint_deficiency(*s, x, 0.5);
  CHECK(r.verdict == Verdict::kLowerBoundOnly);
  CHECK(r.deficiency == doctest::Approx(0.0));
  // Random members of the face D(x) give the same answer; smaller depths refute.
  std::mt19937_64 rng(167);
  for (int k = 0; k < 50; ++k) {
    auto f = testing::positive(rng, 1, 4);
    f *= 1.0 / testing::pnorm(f, 1.0);
    CHECK(slice_sup(*s, x, {f, 0.5}) == doctest::Approx(2.0));
  }
  CHECK(dpoint_deficiency(*s, x, 0.25).verdict == Verdict::kFails);
}
