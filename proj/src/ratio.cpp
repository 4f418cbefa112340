// Optimal-ratio machinery: the vector sets over vertex pairs, the longest
// edge-parallel chord delta_parallel, and the closed-form ratio
// delta / (delta + ell).

#include "gcg/ratio.hpp"

#include <cmath>

#include "gcg/error.hpp"

namespace gcg {

namespace {

// Flip so the first component above noise is positive.
Vec canonical_sign(Vec v) {
  const double tol = 1e-12 * norm(v);
  for (int i = 0; i < v.dim(); ++i) {
    if (std::fabs(v[i]) > tol) {
      if (v[i] < 0.0) v *= -1.0;
      return v;
    }
  }
  return v;
}

constexpr double kParallelCos = 1.0 - 1e-9;

}  // namespace

std::pair<VectorSetA, VectorSetB> build_vector_sets(const Polytope& p) {
  VectorSetA a;
  const int n = p.vertex_count();
  a.vectors.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a.vectors.push_back(canonical_sign(p.vertices[j] - p.vertices[i]));
      a.source_pairs.emplace_back(i, j);
    }
  VectorSetB b;
  b.vectors.reserve(p.edges.size());
  for (auto [i, j] : p.edges) {
    b.vectors.push_back(canonical_sign(p.vertices[j] - p.vertices[i]));
    b.source_pairs.emplace_back(i, j);
  }
  return {std::move(a), std::move(b)};
}

DeltaParallel delta_parallel(const VectorSetA& a, const VectorSetB& b) {
  DeltaParallel best;
  // source_pairs are generated in lexicographic order, so a plain strict
  // improvement test leaves ties on the smallest pair.
  for (size_t ia = 0; ia < a.vectors.size(); ++ia) {
    const Vec& u = a.vectors[ia];
    const double ulen = norm(u);
    if (ulen <= best.delta * (1.0 + 1e-12)) continue;
    for (size_t ib = 0; ib < b.vectors.size(); ++ib) {
      const Vec& v = b.vectors[ib];
      if (std::fabs(dot(u, v)) >= kParallelCos * ulen * norm(v)) {
        best.delta = ulen;
        best.witness_pair = a.source_pairs[ia];
        best.witness_edge = b.source_pairs[ib];
        break;
      }
    }
  }
  return best;
}

double delta_parallel_axis(const Polytope& oriented) {
  const double tol = 1e-9 * oriented.edge_length;
  bool found = false;
  for (auto [i, j] : oriented.edges) {
    const Vec d = oriented.vertices[j] - oriented.vertices[i];
    double off = 0.0;
    for (int k = 1; k < d.dim(); ++k) off = std::max(off, std::fabs(d[k]));
    if (off <= tol) {
      found = true;
      break;
    }
  }
  if (!found)
    throw NumericalError(
        "delta_parallel_axis: no edge parallel to axis 1; orient the polytope first");
  double lo = oriented.vertices[0][0];
  double hi = lo;
  for (const Vec& v : oriented.vertices) {
    lo = std::min(lo, v[0]);
    hi = std::max(hi, v[0]);
  }
  return hi - lo;
}

double r_opt_formula(double delta, double ell) {
  if (!(ell > 0.0)) throw NumericalError("r_opt_formula: edge length must be positive");
  if (delta < ell * (1.0 - 1e-9))
    throw NumericalError("r_opt_formula: delta below edge length; upstream bug");
  return delta / (delta + ell);
}

RatioReport compute_ratio_report(const Polytope& p) {
  const Polytope oriented = orient_edge_to_axis(p);
  const auto [a, b] = build_vector_sets(oriented);
  const DeltaParallel exact = delta_parallel(a, b);
  const double axis = delta_parallel_axis(oriented);
  if (std::fabs(exact.delta - axis) > 1e-9 * exact.delta)
    throw NumericalError("delta_parallel: exact and axis methods disagree");
  RatioReport report;
  report.delta_parallel = exact.delta;
  report.edge_length = p.edge_length;
  report.r_opt = r_opt_formula(exact.delta, p.edge_length);
  report.witness_pair = exact.witness_pair;
  report.witness_edge = exact.witness_edge;
  return report;
}

}  // namespace gcg
