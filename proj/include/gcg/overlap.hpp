#pragma once

#include <utility>
#include <vector>

#include "gcg/polytope.hpp"
#include "gcg/vec.hpp"

namespace gcg {

// Separation margin between two level-1 copies: the largest achievable gap
// over all unit separating directions. Positive means disjoint closures,
// zero means boundary contact, negative means interior penetration.
// `overlaps` is margin < -tau with tau = 1e-9 * diameter(p).
struct PairMargin {
  bool overlaps = false;
  double margin = 0.0;
};

struct OverlapVerdict {
  double ratio = 0.0;
  std::vector<std::pair<int, int>> overlapping_pairs;  // i < j
  double max_penetration = 0.0;  // most negative margin seen, 0 if none
};

struct SearchProbe {
  double r = 0.0;
  OverlapVerdict verdict;
};

struct SearchResult {
  double r_low = 0.0;    // largest probed ratio with overlap
  double r_high = 0.0;   // smallest probed ratio without overlap
  double r_estimate = 0.0;
  double tolerance = 0.0;  // bracket width at termination
  std::vector<SearchProbe> probes;
};

// Precomputed difference-body data for one polytope, reused across ratios
// and vertex pairs. Copies w_i(P) and w_j(P) are translates of (1-r) P, so
// their margin is the signed distance from r (v_j - v_i) to (1-r)(P (+) -P):
// a hull projection (Wolfe) when outside, the nearest facet plane when
// inside. The facet-normal set comes from the catalog builders and is
// complete for every catalog family.
class OverlapContext {
 public:
  explicit OverlapContext(const Polytope& p);

  PairMargin pair_margin(double r, int i, int j) const;
  OverlapVerdict verdict_at(double r) const;  // full pair sweep
  bool has_overlap(double r) const;           // short-circuits, edges first

  const Polytope& polytope() const { return *p_; }
  double tau() const { return tau_; }

 private:
  const Polytope* p_;
  std::vector<Vec> diffs_;             // deduplicated vertex differences
  std::vector<double> base_offsets_;   // support of diffs_ per facet normal
  double tau_ = 0.0;
};

// Whether the interiors of copies w_i(P) and w_j(P) intersect at ratio r,
// plus the separation margin. Boundary contact (|margin| <= tau) is not an
// overlap. Throws UsageError for i == j or r outside (0, 1).
PairMargin copies_overlap(const Polytope& p, double r, int i, int j);

// Margin sweep over all C(V, 2) pairs.
OverlapVerdict any_overlap_at(const Polytope& p, double r);

// Bisection on the overlap predicate. Validates (expanding if needed) that
// r_min overlaps and r_max does not, then halves the bracket to `tolerance`.
// Throws UsageError for tolerance <= 0, NumericalError when no valid
// bracket can be established.
SearchResult search_r_opt(const Polytope& p, double tolerance,
                          double r_min = 0.3, double r_max = 0.99);

}  // namespace gcg
