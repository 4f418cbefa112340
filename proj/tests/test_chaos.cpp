#include <doctest.h>

#include <array>
#include <cmath>
#include <cstring>
#include <vector>

#include "gcg/chaos.hpp"
#include "gcg/error.hpp"
#include "gcg/hutchinson.hpp"
#include "gcg/polytope.hpp"
#include "gcg/rng.hpp"
#include "helpers.hpp"

using namespace gcg;
using test::kPhi;

TEST_SUITE_BEGIN("chaos");

TEST_CASE("gcg_step arithmetic") {
  SUBCASE("a vertex is a fixed point") {
    const Vec v{0.3, -0.7, 1.1};
    const Vec out = gcg_step(v, v, 0.37);
    CHECK(dist(out, v) < 1e-15);
  }
  SUBCASE("midpoint at r = 1/2") {
    const Vec out = gcg_step(Vec{0.0, 0.0}, Vec{1.0, 0.0}, 0.5);
    CHECK(out[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(out[1] == 0.0);
  }
  SUBCASE("origin toward (1, 0, phi) at r = 1/phi") {
    const Vec out = gcg_step(Vec{0.0, 0.0, 0.0}, Vec{1.0, 0.0, kPhi}, 1.0 / kPhi);
    CHECK(out[0] == doctest::Approx(1.0 / kPhi).epsilon(1e-15));
    CHECK(out[1] == 0.0);
    CHECK(out[2] == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(gcg_step(Vec{0.0, 0.0}, Vec{1.0, 0.0, 0.0}, 0.5), UsageError);
  }
}

TEST_CASE("contraction factor is exactly 1 - r on random pairs") {
  Rng rng(31337);
  for (int t = 0; t < 200; ++t) {
    const int dim = 2 + static_cast<int>(rng.bounded(4));
    const double r = 0.05 + 0.9 * rng.uniform01();
    const Vec x = test::random_unit_cube_point(rng, dim);
    const Vec y = test::random_unit_cube_point(rng, dim);
    const Vec v = test::random_unit_cube_point(rng, dim);
    const double before = dist(x, y);
    const double after = dist(gcg_step(x, v, r), gcg_step(y, v, r));
    CHECK(std::fabs(after - (1.0 - r) * before) <= 1e-12 * before);
  }
}

TEST_CASE("determinism: same seed, bitwise-identical cloud") {
  const Polytope p = make_polytope("pentagon", 1.0);
  GcgConfig cfg;
  cfg.ratio = 0.6;
  cfg.iterations = 5000;
  cfg.seed = 424242;
  const PointCloud a = gcg_run(p, cfg);
  const PointCloud b = gcg_run(p, cfg);
  REQUIRE(a.points.size() == b.points.size());
  for (size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i] == b.points[i]);
    CHECK(a.vertex_labels[i] == b.vertex_labels[i]);
  }
  cfg.seed = 424243;
  const PointCloud c = gcg_run(p, cfg);
  bool all_equal = true;
  for (size_t i = 0; i < a.points.size() && all_equal; ++i)
    all_equal = a.points[i] == c.points[i];
  CHECK(!all_equal);
}

TEST_CASE("cloud size, labels, and hull confinement") {
  const Polytope p = make_polytope("icosahedron", 1.0);
  GcgConfig cfg;
  cfg.ratio = 1.0 / kPhi;
  cfg.iterations = 20000;
  cfg.discard = 6;
  cfg.seed = 7;
  const PointCloud cloud = gcg_run(p, cfg);
  CHECK(cloud.points.size() == 20000 - 6);
  CHECK(cloud.vertex_labels.size() == cloud.points.size());
  const double tol = 1e-9 * p.diameter();
  for (size_t i = 0; i < cloud.points.size(); ++i) {
    CHECK(cloud.vertex_labels[i] >= 1);
    CHECK(cloud.vertex_labels[i] <= 12);
    CHECK(hull_contains(p, cloud.points[i], tol));
  }
}

// Every retained point lies in the level-k copy named by its own last k
// vertex choices, which is a direct consequence of x_0 lying in the hull.
// The copy is taken from the deterministic iterator's own output, located
// by the lexicographic ancestry index.
TEST_CASE("level-k confinement with discard = k") {
  const int k = 6;
  for (const std::string id : {"triangle", "square"}) {
    const Polytope p = make_polytope(id, 1.0);
    GcgConfig cfg;
    cfg.ratio = 0.5;
    cfg.iterations = 4000;
    cfg.discard = k;
    cfg.seed = 99;
    const PointCloud cloud = gcg_run(p, cfg);
    const CopySet level_k = hutchinson_iterate(p, cfg.ratio, k);
    const int nverts = p.vertex_count();
    const double tol = 1e-9 * p.diameter();
    for (size_t c = k - 1; c < cloud.points.size(); ++c) {
      // ancestry = labels of the k steps ending at point c, oldest first
      size_t index = 0;
      for (size_t s = c - (k - 1); s <= c; ++s)
        index = index * nverts + (cloud.vertex_labels[s] - 1);
      const PolytopeCopy& copy = level_k.copies[index];
      bool inside = true;
      for (const Vec& n : p.facet_normals) {
        double h = dot(n, copy.vertices[0]);
        for (const Vec& q : copy.vertices) h = std::max(h, dot(n, q));
        if (dot(n, cloud.points[c]) > h + tol) inside = false;
      }
      REQUIRE(inside);
    }
  }
}

TEST_CASE("vertex choice frequencies are uniform to 5 sigma") {
  const Polytope p = make_polytope("square", 1.0);
  GcgConfig cfg;
  cfg.ratio = 0.5;
  cfg.iterations = 100000;
  cfg.discard = 0;
  cfg.seed = 2718;
  const PointCloud cloud = gcg_run(p, cfg);
  std::array<long long, 4> counts{};
  for (int label : cloud.vertex_labels) counts[label - 1]++;
  const double n = static_cast<double>(cfg.iterations);
  const double mean = n / 4.0;
  const double sigma = std::sqrt(n * 0.25 * 0.75);
  for (long long c : counts) CHECK(std::fabs(c - mean) < 5.0 * sigma);
}

// With delta == ell the four square copies tile the square exactly, so a
// long run fills space: nearly every cell of a 16x16 grid gets hit.
TEST_CASE("square at r = 1/2 fills a 16x16 occupancy grid") {
  const Polytope p = make_polytope("square", 1.0);
  GcgConfig cfg;
  cfg.ratio = 0.5;
  cfg.iterations = 100000;
  cfg.seed = 5;
  const PointCloud cloud = gcg_run(p, cfg);
  std::array<bool, 256> hit{};
  for (const Vec& q : cloud.points) {
    const int cx = std::clamp(static_cast<int>((q[0] + 0.5) * 16.0), 0, 15);
    const int cy = std::clamp(static_cast<int>((q[1] + 0.5) * 16.0), 0, 15);
    hit[16 * cy + cx] = true;
  }
  int hits = 0;
  for (bool h : hit) hits += h;
  CHECK(hits > 0.99 * 256.0);
}

// Sierpinski structure: at the touching ratio no retained point may sit
// strictly inside a level-1 copy of a different color.
TEST_CASE("triangle at r = 1/2 keeps colors out of foreign copies") {
  const Polytope p = make_polytope("triangle", 1.0);
  GcgConfig cfg;
  cfg.ratio = 0.5;
  cfg.iterations = 50000;
  cfg.seed = 12;
  const PointCloud cloud = gcg_run(p, cfg);
  for (size_t i = 0; i < cloud.points.size(); ++i) {
    const int own = cloud.vertex_labels[i] - 1;
    for (int j = 0; j < 3; ++j) {
      if (j == own) continue;
      const test::CopyPlanes copy{&p, 0.5, j};
      REQUIRE(!copy.strictly_inside(cloud.points[i], 1e-9));
    }
  }
}

TEST_CASE("user-supplied initial point outside the hull converges in") {
  const Polytope p = make_polytope("triangle", 1.0);
  GcgConfig cfg;
  cfg.ratio = 0.5;
  cfg.iterations = 200;
  cfg.discard = 0;
  cfg.seed = 3;
  cfg.initial_point = Vec{50.0, 50.0};
  const PointCloud cloud = gcg_run(p, cfg);
  // documented burn-in: ceil(log(eps) / log(1 - r)) steps to shrink the
  // initial offset below eps
  const double eps = 1e-9;
  const int burn = static_cast<int>(
      std::ceil(std::log(eps / 100.0) / std::log(1.0 - cfg.ratio)));
  const double tol = 1e-9 * p.diameter();
  for (size_t i = burn; i < cloud.points.size(); ++i)
    CHECK(hull_contains(p, cloud.points[i], tol));
}

TEST_CASE("configuration validation") {
  const Polytope p = make_polytope("triangle", 1.0);
  GcgConfig cfg;
  cfg.ratio = 1.0;
  CHECK_THROWS_AS(gcg_run(p, cfg), UsageError);
  cfg.ratio = 0.5;
  cfg.iterations = 0;
  CHECK_THROWS_AS(gcg_run(p, cfg), UsageError);
  cfg.iterations = 10;
  cfg.discard = 10;
  CHECK_THROWS_AS(gcg_run(p, cfg), UsageError);
  cfg.discard = 2;
  cfg.initial_point = Vec{0.0, 0.0, 0.0};
  CHECK_THROWS_AS(gcg_run(p, cfg), UsageError);
}

TEST_SUITE_END();
