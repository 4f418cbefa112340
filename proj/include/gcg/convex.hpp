#pragma once

#include <span>
#include <vector>

#include "gcg/vec.hpp"

namespace gcg {

// Result of projecting the origin onto the convex hull of a finite point set.
//
// `point` is the minimum-norm element of the hull, expressed as the convex
// combination sum(coeff[k] * pts[support[k]]). `certificate_gap` is
// min_j <point, p_j> - |point|^2; at the true optimum it is >= 0 up to
// rounding, so callers can assert solution quality directly.
struct MinNormResult {
  Vec point;
  double distance = 0.0;
  std::vector<int> support;
  std::vector<double> coeff;
  double certificate_gap = 0.0;
};

// Wolfe's minimum-norm-point algorithm. Exact for polytopes: terminates on a
// support set whose affine minimizer is the global projection.
MinNormResult min_norm_point(std::span<const Vec> pts);

// Euclidean distance from x to conv(pts), plus the witness projection.
struct HullDistance {
  double distance = 0.0;
  Vec projection;
};
HullDistance distance_to_hull(const Vec& x, std::span<const Vec> pts);

// Indices of the convex hull of a 2D point set in counterclockwise order
// (monotone chain). Collinear points on the hull boundary are dropped.
std::vector<int> convex_hull_2d(std::span<const Vec> pts);

// Outward unit edge normals of a 2D hull that contains the origin in its
// interior.
std::vector<Vec> hull_edge_normals_2d(std::span<const Vec> pts);

}  // namespace gcg
