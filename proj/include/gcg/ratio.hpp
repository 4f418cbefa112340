#pragma once

#include <utility>
#include <vector>

#include "gcg/polytope.hpp"
#include "gcg/vec.hpp"

namespace gcg {

// One direction vector per unordered vertex pair, sign-canonicalized so the
// first nonzero component is positive. size == C(V, 2).
struct VectorSetA {
  std::vector<Vec> vectors;
  std::vector<std::pair<int, int>> source_pairs;
};

// The subset of VectorSetA along edges; every vector has magnitude ell.
struct VectorSetB {
  std::vector<Vec> vectors;
  std::vector<std::pair<int, int>> source_pairs;
};

struct DeltaParallel {
  double delta = 0.0;
  std::pair<int, int> witness_pair{-1, -1};  // vertex pair realizing delta
  std::pair<int, int> witness_edge{-1, -1};  // edge it is parallel to
};

// delta_parallel, the edge length, and the resulting optimal contraction
// ratio delta / (delta + ell), together with the witnesses.
struct RatioReport {
  double delta_parallel = 0.0;
  double edge_length = 0.0;
  double r_opt = 0.0;
  std::pair<int, int> witness_pair{-1, -1};
  std::pair<int, int> witness_edge{-1, -1};
};

std::pair<VectorSetA, VectorSetB> build_vector_sets(const Polytope& p);

// Longest inter-vertex vector parallel to some edge vector. Parallelism is
// |<u, b>| >= (1 - 1e-9) |u| |b|; ties resolved toward the lexicographically
// smallest vertex pair.
DeltaParallel delta_parallel(const VectorSetA& a, const VectorSetB& b);

// Fast path: the polytope must already have an edge parallel to axis 1
// (orient_edge_to_axis); returns the spread of the first coordinate.
// Throws NumericalError when no axis-parallel edge exists.
double delta_parallel_axis(const Polytope& oriented);

// delta / (delta + ell); throws NumericalError when delta < ell, which is
// impossible for valid inputs and signals an upstream defect.
double r_opt_formula(double delta, double ell);

// Orients the polytope, runs both the exact pair scan and the axis method,
// requires them to agree to 1e-9 relative, and reports the exact value.
RatioReport compute_ratio_report(const Polytope& p);

}  // namespace gcg
