// Overlap verification for the level-1 copies.
//
// Both copies are translates of the common body (1-r) P, so the pair test
// reduces to locating w = r (v_j - v_i) relative to the difference body
// M = (1-r) (P (+) -P) = conv{(1-r)(v_a - v_b)}:
//
//   w outside M  ->  margin = dist(w, M)        (copies disjoint)
//   w inside M   ->  margin = -dist(w, bd M)    (interiors intersect)
//
// The outside distance is an exact hull projection (Wolfe's minimum-norm
// point). The inside distance is the minimum over M's facet planes; facet
// normals are supplied by the catalog builders, and any supporting
// direction beyond the true facet set can only produce larger plane
// distances, so supersets are harmless.

#include "gcg/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gcg/convex.hpp"
#include "gcg/error.hpp"

namespace gcg {

OverlapContext::OverlapContext(const Polytope& p) : p_(&p) {
  if (p.diff_facet_normals.empty())
    throw UsageError("overlap: polytope carries no difference-body facet normals");
  const int n = p.vertex_count();
  diffs_.reserve(static_cast<size_t>(n) * (n - 1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) diffs_.push_back(p.vertices[b] - p.vertices[a]);
  // Structured builders produce bitwise-equal differences; deduplicate on
  // exact equality (a miss only costs time, never correctness).
  auto lex_less = [](const Vec& a, const Vec& b) {
    for (int k = 0; k < a.dim(); ++k)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  };
  std::sort(diffs_.begin(), diffs_.end(), lex_less);
  diffs_.erase(std::unique(diffs_.begin(), diffs_.end()), diffs_.end());
  base_offsets_.reserve(p.diff_facet_normals.size());
  double diam = 0.0;
  for (const Vec& d : diffs_) diam = std::max(diam, norm(d));
  tau_ = 1e-9 * diam;
  for (const Vec& nrm : p.diff_facet_normals) {
    double h = dot(nrm, diffs_[0]);
    for (const Vec& d : diffs_) h = std::max(h, dot(nrm, d));
    base_offsets_.push_back(h);
  }
}

PairMargin OverlapContext::pair_margin(double r, int i, int j) const {
  if (i == j) throw UsageError("copies_overlap: identical copies");
  if (!(r > 0.0 && r < 1.0))
    throw UsageError("copies_overlap: ratio must lie in (0, 1)");
  const int n = p_->vertex_count();
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw UsageError("copies_overlap: vertex index out of range");
  if (i > j) std::swap(i, j);  // margins are exactly symmetric

  const double shrink = 1.0 - r;
  const Vec w = r * (p_->vertices[j] - p_->vertices[i]);

  // Outside distance via projection of w onto (1-r) * conv(diffs).
  std::vector<Vec> shifted(diffs_.begin(), diffs_.end());
  for (Vec& d : shifted) {
    d *= shrink;
    d -= w;
  }
  const MinNormResult proj = min_norm_point(shifted);
  if (proj.distance > tau_) return PairMargin{false, proj.distance};

  // Inside (or touching): nearest facet plane of the scaled difference body.
  double depth = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < base_offsets_.size(); ++k)
    depth = std::min(depth,
                     shrink * base_offsets_[k] - dot(p_->diff_facet_normals[k], w));
  const double margin = -depth;
  return PairMargin{margin < -tau_, margin};
}

OverlapVerdict OverlapContext::verdict_at(double r) const {
  OverlapVerdict v;
  v.ratio = r;
  double worst = 0.0;
  const int n = p_->vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const PairMargin m = pair_margin(r, i, j);
      if (m.overlaps) v.overlapping_pairs.emplace_back(i, j);
      worst = std::min(worst, m.margin);
    }
  v.max_penetration = worst;
  return v;
}

bool OverlapContext::has_overlap(double r) const {
  // Edge pairs hit the touching condition first; probing them before the
  // long chords makes the overlapping side of the bisection cheap.
  for (auto [i, j] : p_->edges)
    if (pair_margin(r, i, j).overlaps) return true;
  std::vector<std::vector<char>> is_edge(p_->vertex_count(),
                                         std::vector<char>(p_->vertex_count(), 0));
  for (auto [i, j] : p_->edges) is_edge[i][j] = 1;
  const int n = p_->vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (is_edge[i][j]) continue;
      if (pair_margin(r, i, j).overlaps) return true;
    }
  return false;
}

PairMargin copies_overlap(const Polytope& p, double r, int i, int j) {
  return OverlapContext(p).pair_margin(r, i, j);
}

OverlapVerdict any_overlap_at(const Polytope& p, double r) {
  return OverlapContext(p).verdict_at(r);
}

namespace {

// Witness-only verdict recorded for short-circuited probes.
OverlapVerdict probe_verdict(const OverlapContext& ctx, double r, bool overlap) {
  OverlapVerdict v;
  v.ratio = r;
  if (overlap) {
    const Polytope& p = ctx.polytope();
    const int n = p.vertex_count();
    for (int i = 0; i < n && v.overlapping_pairs.empty(); ++i)
      for (int j = i + 1; j < n; ++j) {
        const PairMargin m = ctx.pair_margin(r, i, j);
        if (m.overlaps) {
          v.overlapping_pairs.emplace_back(i, j);
          v.max_penetration = m.margin;
          break;
        }
      }
  }
  return v;
}

}  // namespace

SearchResult search_r_opt(const Polytope& p, double tolerance, double r_min,
                          double r_max) {
  if (!(tolerance > 0.0)) throw UsageError("search_r_opt: tolerance must be positive");
  if (!(r_min > 0.0 && r_max < 1.0 && r_min < r_max))
    throw UsageError("search_r_opt: need 0 < r_min < r_max < 1");

  const OverlapContext ctx(p);
  SearchResult out;
  auto probe = [&](double r) {
    const bool overlap = ctx.has_overlap(r);
    out.probes.push_back(SearchProbe{r, probe_verdict(ctx, r, overlap)});
    return overlap;
  };

  double lo = r_min;
  double hi = r_max;
  bool lo_overlaps = probe(lo);
  bool hi_overlaps = probe(hi);
  for (int attempt = 0; attempt < 60 && (!lo_overlaps || hi_overlaps); ++attempt) {
    if (!lo_overlaps) {
      lo *= 0.5;
      lo_overlaps = probe(lo);
    }
    if (hi_overlaps) {
      hi = 0.5 * (1.0 + hi);
      hi_overlaps = probe(hi);
    }
  }
  if (!lo_overlaps || hi_overlaps)
    throw NumericalError(
        "search_r_opt: could not establish an overlap/no-overlap bracket; "
        "the overlap predicate does not behave monotonically over the probes");

  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (probe(mid))
      lo = mid;
    else
      hi = mid;
  }

  out.r_low = lo;
  out.r_high = hi;
  out.r_estimate = 0.5 * (lo + hi);
  out.tolerance = hi - lo;
  return out;
}

}  // namespace gcg
