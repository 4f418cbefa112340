#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcg/polytope.hpp"
#include "gcg/vec.hpp"

namespace gcg {

// Run parameters for the chaos game. `discard` leading points are dropped
// from the output; when no initial point is given, one is rejection-sampled
// uniformly from the polytope's convex hull.
struct GcgConfig {
  double ratio = 0.5;
  long long iterations = 100000;
  long long discard = 6;
  std::uint64_t seed = 1;
  std::optional<Vec> initial_point;
};

// Ordered chaos-game points with, for each point, the 1-based label of the
// vertex that produced it. points.size() == iterations - discard.
struct PointCloud {
  int dimension = 0;
  std::vector<Vec> points;
  std::vector<int> vertex_labels;  // in 1..V
  GcgConfig config;
  std::string polytope_name;
};

// One iteration step: (1 - r) x + r vertex. Throws on dimension mismatch.
Vec gcg_step(const Vec& x, const Vec& vertex, double r);

// Plays the game. Deterministic for a fixed seed; vertex choices are
// uniform and independent. Throws UsageError on invalid configuration.
PointCloud gcg_run(const Polytope& p, const GcgConfig& cfg);

}  // namespace gcg
