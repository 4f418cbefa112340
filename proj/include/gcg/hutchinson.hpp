#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gcg/polytope.hpp"
#include "gcg/vec.hpp"

namespace gcg {

// One scaled/translated image of the base polytope. `ancestry` lists the
// vertex indices (0-based, oldest first) of the maps applied so far; the
// copy equals w_{a_k} o ... o w_{a_1} applied to the base vertices, where
// w_i(x) = (1 - r) x + r v_i.
struct PolytopeCopy {
  std::vector<Vec> vertices;
  std::vector<int> ancestry;
};

// The level-k image of the polytope under the union-of-maps operator:
// V^k copies in ancestry-lexicographic order, each with edge length
// (1 - r)^k * ell.
struct CopySet {
  int level = 0;
  double ratio = 0.0;
  std::string base;
  std::vector<PolytopeCopy> copies;
};

inline constexpr long long kDefaultCopyCap = 10'000'000;

// Level 0: the polytope itself as a single copy.
CopySet level0_copy_set(const Polytope& p, double ratio);

// Applies all V maps to every copy; the level increments and each ancestry
// is extended by the index of the map applied.
CopySet hutchinson_step(const CopySet& c, const Polytope& p);

// k applications of hutchinson_step starting at level 0. Throws
// NumericalError when V^level would exceed copy_cap.
CopySet hutchinson_iterate(const Polytope& p, double ratio, int level,
                           long long copy_cap = kDefaultCopyCap);

// All copy vertices of a CopySet as one flat point set.
std::vector<Vec> flatten(const CopySet& c);

// Hausdorff distance max(max_a min_b d(a,b), max_b min_a d(a,b)) between
// finite point sets. Brute force with a sorted-axis pruning window; exact.
// Throws UsageError on empty input.
double hausdorff_distance(std::span<const Vec> a, std::span<const Vec> b);

}  // namespace gcg
