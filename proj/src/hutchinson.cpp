// Deterministic iteration of the union-of-contractions operator at the level
// of whole polytope copies, plus the Hausdorff metric used as a test oracle.

#include "gcg/hutchinson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gcg/error.hpp"

namespace gcg {

CopySet level0_copy_set(const Polytope& p, double ratio) {
  if (!(ratio > 0.0 && ratio < 1.0))
    throw UsageError("copy set: ratio must lie in (0, 1)");
  CopySet c;
  c.level = 0;
  c.ratio = ratio;
  c.base = p.name;
  c.copies.push_back(PolytopeCopy{p.vertices, {}});
  return c;
}

CopySet hutchinson_step(const CopySet& c, const Polytope& p) {
  if (!c.copies.empty() && c.copies[0].vertices[0].dim() != p.dimension)
    throw UsageError("hutchinson_step: dimension mismatch");
  CopySet out;
  out.level = c.level + 1;
  out.ratio = c.ratio;
  out.base = c.base;
  out.copies.reserve(c.copies.size() * p.vertex_count());
  const double keep = 1.0 - c.ratio;
  for (const PolytopeCopy& copy : c.copies) {
    for (int i = 0; i < p.vertex_count(); ++i) {
      PolytopeCopy next;
      next.vertices.reserve(copy.vertices.size());
      for (const Vec& v : copy.vertices) {
        Vec mapped(v.dim());
        for (int k = 0; k < v.dim(); ++k)
          mapped[k] = keep * v[k] + c.ratio * p.vertices[i][k];
        next.vertices.push_back(mapped);
      }
      next.ancestry = copy.ancestry;
      next.ancestry.push_back(i);
      out.copies.push_back(std::move(next));
    }
  }
  return out;
}

CopySet hutchinson_iterate(const Polytope& p, double ratio, int level,
                           long long copy_cap) {
  if (level < 0) throw UsageError("hutchinson_iterate: negative level");
  long long count = 1;
  for (int k = 0; k < level; ++k) {
    if (count > copy_cap / p.vertex_count())
      throw NumericalError("hutchinson_iterate: copy count would exceed cap of " +
                           std::to_string(copy_cap));
    count *= p.vertex_count();
  }
  CopySet c = level0_copy_set(p, ratio);
  for (int k = 0; k < level; ++k) c = hutchinson_step(c, p);
  return c;
}

std::vector<Vec> flatten(const CopySet& c) {
  std::vector<Vec> out;
  for (const PolytopeCopy& copy : c.copies)
    out.insert(out.end(), copy.vertices.begin(), copy.vertices.end());
  return out;
}

namespace {

// Directed distance max_a min_b |a - b|. B is scanned through a window
// sorted on the first coordinate so the inner minimum can stop as soon as
// the axis gap alone exceeds the best candidate.
double directed_hausdorff(std::span<const Vec> a, std::span<const Vec> b) {
  std::vector<int> order(b.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return b[i][0] < b[j][0]; });
  std::vector<double> bx(b.size());
  for (size_t i = 0; i < b.size(); ++i) bx[i] = b[order[i]][0];

  double worst2 = 0.0;
  for (const Vec& pt : a) {
    const auto it = std::lower_bound(bx.begin(), bx.end(), pt[0]);
    long long right = it - bx.begin();
    long long left = right - 1;
    double best2 = std::numeric_limits<double>::infinity();
    while (left >= 0 || right < static_cast<long long>(bx.size())) {
      const double dl = left >= 0 ? pt[0] - bx[left] : std::numeric_limits<double>::infinity();
      const double dr = right < static_cast<long long>(bx.size())
                            ? bx[right] - pt[0]
                            : std::numeric_limits<double>::infinity();
      if (dl * dl > best2 && dr * dr > best2) break;
      if (dl <= dr) {
        best2 = std::min(best2, dist2(pt, b[order[left]]));
        --left;
      } else {
        best2 = std::min(best2, dist2(pt, b[order[right]]));
        ++right;
      }
    }
    worst2 = std::max(worst2, best2);
  }
  return std::sqrt(worst2);
}

}  // namespace

double hausdorff_distance(std::span<const Vec> a, std::span<const Vec> b) {
  if (a.empty() || b.empty())
    throw UsageError("hausdorff_distance: sets must be non-empty");
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

}  // namespace gcg
