#pragma once

// Shared test utilities: seeded generators, independent brute-force oracles,
// and membership helpers for level-1 copies. Oracles here deliberately avoid
// the library's own code paths so they can serve as cross-checks.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gcg/polytope.hpp"
#include "gcg/rng.hpp"
#include "gcg/vec.hpp"

namespace gcg::test {

inline constexpr double kPhi = 1.6180339887498948482045868343656381;

inline Vec random_unit_cube_point(Rng& rng, int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = 2.0 * rng.uniform01() - 1.0;
  return v;
}

inline double gauss(Rng& rng) {
  // Box-Muller; only test-grade quality is needed.
  const double u1 = std::max(rng.uniform01(), 1e-12);
  const double u2 = rng.uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

// Random orthogonal matrix via Gram-Schmidt on a Gaussian matrix, applied
// as a list of row vectors.
inline std::vector<Vec> random_rotation(Rng& rng, int dim) {
  std::vector<Vec> rows(dim, Vec(dim));
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) rows[i][k] = gauss(rng);
    for (int j = 0; j < i; ++j) rows[i] -= dot(rows[i], rows[j]) * rows[j];
    rows[i] = normalized(rows[i]);
  }
  return rows;
}

inline Vec apply_rotation(const std::vector<Vec>& rows, const Vec& v) {
  Vec out(v.dim());
  for (int i = 0; i < v.dim(); ++i) out[i] = dot(rows[i], v);
  return out;
}

inline Polytope rotate_polytope(const std::vector<Vec>& rows, const Polytope& p) {
  Polytope out = p;
  for (Vec& v : out.vertices) v = apply_rotation(rows, v);
  for (Vec& n : out.facet_normals) n = apply_rotation(rows, n);
  for (Vec& n : out.diff_facet_normals) n = apply_rotation(rows, n);
  return out;
}

// Independent edge-count oracle: plain O(V^2) scan with its own arithmetic.
inline int brute_force_edge_count(const std::vector<Vec>& verts) {
  double dmin = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) {
      double s = 0.0;
      for (int k = 0; k < verts[i].dim(); ++k) {
        const double d = verts[i][k] - verts[j][k];
        s += d * d;
      }
      dmin = std::min(dmin, std::sqrt(s));
    }
  int count = 0;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) {
      double s = 0.0;
      for (int k = 0; k < verts[i].dim(); ++k) {
        const double d = verts[i][k] - verts[j][k];
        s += d * d;
      }
      if (std::sqrt(s) <= dmin * (1.0 + 1e-9)) ++count;
    }
  return count;
}

// Independent directed-Hausdorff oracle: unpruned double loop.
inline double brute_force_hausdorff(const std::vector<Vec>& a,
                                    const std::vector<Vec>& b) {
  auto directed = [](const std::vector<Vec>& from, const std::vector<Vec>& to) {
    double worst = 0.0;
    for (const Vec& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Vec& q : to) best = std::min(best, dist2(p, q));
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(directed(a, b), directed(b, a));
}

// Level-1 copy w_i(P) = (1-r) P + r v_i described by the polytope's facet
// planes: normal n keeps its direction, the offset becomes
// (1-r) h_P(n) + r <n, v_i>.
struct CopyPlanes {
  const Polytope* p;
  double r;
  int vertex;

  double offset(const Vec& n) const {
    return (1.0 - r) * p->support(n) + r * dot(n, p->vertices[vertex]);
  }
  bool contains(const Vec& x, double tol) const {
    for (const Vec& n : p->facet_normals)
      if (dot(n, x) > offset(n) + tol) return false;
    return true;
  }
  bool strictly_inside(const Vec& x, double margin) const {
    for (const Vec& n : p->facet_normals)
      if (dot(n, x) > offset(n) - margin) return false;
    return true;
  }
};

// Uniform sample inside copy w_i(P) by rejection from its bounding box.
inline Vec sample_in_copy(Rng& rng, const Polytope& p, double r, int vertex) {
  const CopyPlanes copy{&p, r, vertex};
  Vec lo = p.vertices[0], hi = p.vertices[0];
  for (const Vec& v : p.vertices)
    for (int k = 0; k < p.dimension; ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
  for (int k = 0; k < p.dimension; ++k) {
    const double a = (1.0 - r) * lo[k] + r * p.vertices[vertex][k];
    const double b = (1.0 - r) * hi[k] + r * p.vertices[vertex][k];
    lo[k] = a;
    hi[k] = b;
  }
  Vec x(p.dimension);
  for (;;) {
    for (int k = 0; k < p.dimension; ++k)
      x[k] = lo[k] + rng.uniform01() * (hi[k] - lo[k]);
    if (copy.contains(x, 0.0)) return x;
  }
}

// Sampling overlap oracle: do any of `samples` points drawn inside copy i
// land strictly inside copy j (or vice versa) by more than `margin`?
inline bool sampling_overlap_oracle(Rng& rng, const Polytope& p, double r, int i,
                                    int j, int samples, double margin) {
  const CopyPlanes ci{&p, r, i};
  const CopyPlanes cj{&p, r, j};
  for (int s = 0; s < samples; ++s) {
    if (cj.strictly_inside(sample_in_copy(rng, p, r, i), margin)) return true;
    if (ci.strictly_inside(sample_in_copy(rng, p, r, j), margin)) return true;
  }
  return false;
}

}  // namespace gcg::test
