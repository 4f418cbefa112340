// Projection onto convex hulls of finite point sets (Wolfe's minimum-norm
// point algorithm) and small 2D hull utilities.
//
// Wolfe's algorithm maintains a "corral": an affinely independent subset S
// whose affine minimum-norm point has strictly positive coefficients. Each
// major cycle adds the best support point in the direction of -x; minor
// cycles walk back onto the convex position. The algorithm is finite and, at
// termination, x satisfies the optimality certificate
//     <x, p_j> >= <x, x>   for every input point p_j,
// which we expose so tests can verify solutions independently.

#include "gcg/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gcg {

namespace {

// Solves the bordered KKT system for the affine minimum-norm point of the
// points S: minimize |sum b_i s_i|^2 subject to sum b_i = 1.
//
//   [ G  1 ] [b]   [0]        G_ij = <s_i, s_j>
//   [ 1' 0 ] [l] = [1]
//
// Gaussian elimination with partial pivoting; a vanishing pivot (affinely
// dependent set) is nudged with a tiny ridge, which the minor loop then
// resolves by dropping a point.
std::vector<double> affine_min_norm(std::span<const Vec> pts,
                                    const std::vector<int>& S) {
  const int k = static_cast<int>(S.size());
  const int m = k + 1;
  std::vector<double> a(static_cast<size_t>(m) * m, 0.0);
  std::vector<double> rhs(m, 0.0);
  double diag_scale = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a[i * m + j] = dot(pts[S[i]], pts[S[j]]);
    diag_scale = std::max(diag_scale, a[i * m + i]);
    a[i * m + k] = 1.0;
    a[k * m + i] = 1.0;
  }
  rhs[k] = 1.0;
  if (diag_scale == 0.0) diag_scale = 1.0;

  // LU with partial pivoting on the (m x m) system.
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    double best = std::fabs(a[perm[col] * m + col]);
    for (int r = col + 1; r < m; ++r) {
      const double v = std::fabs(a[perm[r] * m + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    std::swap(perm[col], perm[piv]);
    double& pivot = a[perm[col] * m + col];
    if (std::fabs(pivot) < 1e-14 * diag_scale)
      pivot += (pivot >= 0 ? 1.0 : -1.0) * 1e-12 * diag_scale;
    for (int r = col + 1; r < m; ++r) {
      const double f = a[perm[r] * m + col] / pivot;
      if (f == 0.0) continue;
      a[perm[r] * m + col] = 0.0;
      for (int c = col + 1; c < m; ++c) a[perm[r] * m + c] -= f * a[perm[col] * m + c];
      rhs[perm[r]] -= f * rhs[perm[col]];
    }
  }
  std::vector<double> sol(m, 0.0);
  for (int row = m - 1; row >= 0; --row) {
    double s = rhs[perm[row]];
    for (int c = row + 1; c < m; ++c) s -= a[perm[row] * m + c] * sol[c];
    sol[row] = s / a[perm[row] * m + row];
  }
  sol.resize(k);  // drop the multiplier
  return sol;
}

Vec combine(std::span<const Vec> pts, const std::vector<int>& S,
            const std::vector<double>& alpha) {
  Vec x(pts[0].dim());
  for (size_t i = 0; i < S.size(); ++i) x += alpha[i] * pts[S[i]];
  return x;
}

}  // namespace

MinNormResult min_norm_point(std::span<const Vec> pts) {
  if (pts.empty()) throw std::invalid_argument("min_norm_point: empty point set");
  const int m = static_cast<int>(pts.size());

  double scale2 = 0.0;
  for (const Vec& p : pts) scale2 = std::max(scale2, norm2(p));
  const double eps_opt = 1e-14 * std::max(scale2, 1e-30);
  const double eps_coeff = 1e-14;

  int j0 = 0;
  double best0 = norm2(pts[0]);
  for (int j = 1; j < m; ++j) {
    const double v = norm2(pts[j]);
    if (v < best0) {
      best0 = v;
      j0 = j;
    }
  }
  std::vector<int> S{j0};
  std::vector<double> alpha{1.0};
  Vec x = pts[j0];

  const int max_major = 2 * m + 64;
  for (int major = 0; major < max_major; ++major) {
    // Support query: most improving point in direction -x.
    int t = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < m; ++j) {
      const double v = dot(x, pts[j]);
      if (v < best) {
        best = v;
        t = j;
      }
    }
    if (best >= norm2(x) - eps_opt) break;
    if (std::find(S.begin(), S.end(), t) != S.end()) break;  // numerical stall
    S.push_back(t);
    alpha.push_back(0.0);

    for (int minor = 0; minor < 2 * kMaxDim + 16; ++minor) {
      std::vector<double> beta = affine_min_norm(pts, S);
      double beta_min = beta[0];
      for (double b : beta) beta_min = std::min(beta_min, b);
      if (beta_min >= -eps_coeff) {
        alpha = std::move(beta);
        for (double& av : alpha) av = std::max(av, 0.0);
        break;
      }
      // Step from alpha toward beta until the first coefficient vanishes.
      double theta = 1.0;
      for (size_t i = 0; i < S.size(); ++i) {
        if (beta[i] < eps_coeff && alpha[i] > beta[i]) {
          theta = std::min(theta, alpha[i] / (alpha[i] - beta[i]));
        }
      }
      for (size_t i = 0; i < S.size(); ++i)
        alpha[i] = (1.0 - theta) * alpha[i] + theta * beta[i];
      // Drop vanished points (keep at least one).
      for (int i = static_cast<int>(S.size()) - 1; i >= 0 && S.size() > 1; --i) {
        if (alpha[i] <= eps_coeff) {
          S.erase(S.begin() + i);
          alpha.erase(alpha.begin() + i);
        }
      }
      double total = 0.0;
      for (double av : alpha) total += av;
      for (double& av : alpha) av /= total;
    }
    x = combine(pts, S, alpha);
  }

  x = combine(pts, S, alpha);
  MinNormResult out;
  out.point = x;
  out.distance = norm(x);
  out.support = S;
  out.coeff = alpha;
  double gap = std::numeric_limits<double>::infinity();
  const double xx = norm2(x);
  for (int j = 0; j < m; ++j) gap = std::min(gap, dot(x, pts[j]) - xx);
  out.certificate_gap = gap;
  return out;
}

HullDistance distance_to_hull(const Vec& x, std::span<const Vec> pts) {
  std::vector<Vec> shifted(pts.begin(), pts.end());
  for (Vec& p : shifted) p -= x;
  const MinNormResult r = min_norm_point(shifted);
  return HullDistance{r.distance, r.point + x};
}

std::vector<int> convex_hull_2d(std::span<const Vec> pts) {
  const int m = static_cast<int>(pts.size());
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
    return pts[a][1] < pts[b][1];
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](int a, int b) {
                          return pts[a][0] == pts[b][0] && pts[a][1] == pts[b][1];
                        }),
            idx.end());
  const int n = static_cast<int>(idx.size());
  if (n < 3) return idx;

  auto cross = [&](int o, int a, int b) {
    return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) -
           (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
  };
  std::vector<int> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], idx[i]) <= 0) --k;
    hull[k++] = idx[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {  // upper
    while (k >= lower && cross(hull[k - 2], hull[k - 1], idx[i]) <= 0) --k;
    hull[k++] = idx[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Vec> hull_edge_normals_2d(std::span<const Vec> pts) {
  const std::vector<int> hull = convex_hull_2d(pts);
  std::vector<Vec> normals;
  normals.reserve(hull.size());
  const int h = static_cast<int>(hull.size());
  for (int i = 0; i < h; ++i) {
    const Vec& a = pts[hull[i]];
    const Vec& b = pts[hull[(i + 1) % h]];
    Vec n{b[1] - a[1], a[0] - b[0]};  // right-hand normal of a ccw edge
    n = normalized(n);
    if (dot(n, a) < 0.0) n *= -1.0;  // outward, origin interior
    normals.push_back(n);
  }
  return normals;
}

}  // namespace gcg
