// The chaos game iteration. The draw order is pinned so runs are
// reproducible from the seed alone: first the initial point (one uniform
// per axis per rejection round), then one bounded draw per iteration.

#include "gcg/chaos.hpp"

#include <cmath>

#include "gcg/error.hpp"
#include "gcg/rng.hpp"

namespace gcg {

Vec gcg_step(const Vec& x, const Vec& vertex, double r) {
  if (x.dim() != vertex.dim()) throw UsageError("gcg_step: dimension mismatch");
  Vec out(x.dim());
  for (int i = 0; i < x.dim(); ++i) out[i] = (1.0 - r) * x[i] + r * vertex[i];
  return out;
}

PointCloud gcg_run(const Polytope& p, const GcgConfig& cfg) {
  if (!(cfg.ratio > 0.0 && cfg.ratio < 1.0))
    throw UsageError("gcg_run: ratio must lie in (0, 1)");
  if (cfg.iterations <= 0) throw UsageError("gcg_run: iterations must be positive");
  if (cfg.discard < 0 || cfg.discard >= cfg.iterations)
    throw UsageError("gcg_run: discard must satisfy 0 <= discard < iterations");

  const int n = p.dimension;
  const int nverts = p.vertex_count();
  Rng rng(cfg.seed);

  Vec x(n);
  if (cfg.initial_point) {
    if (cfg.initial_point->dim() != n)
      throw UsageError("gcg_run: initial point dimension mismatch");
    x = *cfg.initial_point;
  } else {
    Vec lo = p.vertices[0];
    Vec hi = p.vertices[0];
    for (const Vec& v : p.vertices)
      for (int i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
    const double tol = 1e-9 * p.diameter();
    for (long long tries = 0;; ++tries) {
      if (tries > 10'000'000)
        throw NumericalError("gcg_run: hull rejection sampling did not terminate");
      for (int i = 0; i < n; ++i) x[i] = lo[i] + rng.uniform01() * (hi[i] - lo[i]);
      if (hull_contains(p, x, tol)) break;
    }
  }

  PointCloud cloud;
  cloud.dimension = n;
  cloud.config = cfg;
  cloud.polytope_name = p.name;
  const long long kept = cfg.iterations - cfg.discard;
  cloud.points.reserve(kept);
  cloud.vertex_labels.reserve(kept);

  for (long long c = 1; c <= cfg.iterations; ++c) {
    const int pick = static_cast<int>(rng.bounded(static_cast<std::uint32_t>(nverts)));
    x = gcg_step(x, p.vertices[pick], cfg.ratio);
    if (c > cfg.discard) {
      cloud.points.push_back(x);
      cloud.vertex_labels.push_back(pick + 1);
    }
  }
  return cloud;
}

}  // namespace gcg
