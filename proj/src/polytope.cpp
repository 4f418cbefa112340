// Catalog of regular polytopes.
//
// Every builder produces exact-arithmetic coordinates in a canonical pose
// (centroid at the origin), then rescales so the minimal pairwise distance
// equals the requested edge length. Facet normals are attached here, where
// the structure is known, instead of being reconstructed downstream:
//
//   polygon:k      vertices on a circle; normals from the 2D hulls
//   simplex:n      columns of the Helmert basis; the difference body's
//                  facet normals are the normalized vertex-subset sums
//   hypercube:n    sign vectors; normals +-e_i
//   orthoplex:n    +-e_i; normals are the 2^n sign vectors
//   icosahedron    (0, +-phi, +-1) cyclic; face normals from triangle cliques
//   dodecahedron   (+-1,+-1,+-1) and cyclic (0,+-1/phi,+-phi); face normals
//                  are the cyclic permutations of (0, +-phi, +-1)
//   24-cell        permutations of (+-1,+-1,0,0); facet normals +-e_i and
//                  (+-1/2,+-1/2,+-1/2,+-1/2)
//
// For centrally symmetric polytopes the difference body is 2P, so its facet
// normals coincide with the polytope's own.

#include "gcg/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "gcg/convex.hpp"
#include "gcg/error.hpp"

namespace gcg {

namespace {

constexpr double kPhi = 1.6180339887498948482045868343656381;  // (sqrt(5)+1)/2

// Minimal pairwise distance; throws on duplicates.
double min_pair_distance(std::span<const Vec> vs) {
  const int n = static_cast<int>(vs.size());
  if (n < 2) throw UsageError("detect_edges: need at least two vertices");
  double scale = 0.0;
  for (const Vec& v : vs) scale = std::max(scale, norm(v));
  double dmin2 = dist2(vs[0], vs[1]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dmin2 = std::min(dmin2, dist2(vs[i], vs[j]));
  const double dup = 1e-12 * (1.0 + scale);
  if (dmin2 <= dup * dup) throw UsageError("detect_edges: duplicate vertices");
  return std::sqrt(dmin2);
}

std::vector<Vec> all_sign_vectors(int n) {
  std::vector<Vec> out;
  out.reserve(1u << n);
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? 1.0 : -1.0;
    out.push_back(v);
  }
  return out;
}

// Regular n-simplex: vertex i is column i of the Helmert basis of the
// hyperplane {x in R^(n+1) : sum x = 0}, which gives n+1 mutually
// equidistant unit-norm-scaled points with centroid zero and edge sqrt(2).
std::vector<Vec> simplex_vertices(int n) {
  // Helmert rows h_k in R^(n+1), k = 1..n: (1,..,1,-k,0,..)/sqrt(k(k+1)).
  std::vector<Vec> verts(n + 1, Vec(n));
  for (int k = 1; k <= n; ++k) {
    const double denom = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i <= n; ++i) {
      double hk_i = 0.0;
      if (i < k)
        hk_i = denom;
      else if (i == k)
        hk_i = -static_cast<double>(k) * denom;
      verts[i][k - 1] = hk_i;
    }
  }
  return verts;
}

std::vector<Vec> polygon_vertices(int k) {
  std::vector<Vec> verts;
  verts.reserve(k);
  for (int i = 0; i < k; ++i) {
    const double a = 2.0 * std::numbers::pi * i / k;
    verts.push_back(Vec{std::cos(a), std::sin(a)});
  }
  return verts;
}

std::vector<Vec> icosahedron_vertices() {
  std::vector<Vec> verts;
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) {
      verts.push_back(Vec{0.0, s1 * kPhi, s2 * 1.0});
      verts.push_back(Vec{s2 * 1.0, 0.0, s1 * kPhi});
      verts.push_back(Vec{s1 * kPhi, s2 * 1.0, 0.0});
    }
  return verts;
}

std::vector<Vec> dodecahedron_vertices() {
  std::vector<Vec> verts;
  const double inv = 1.0 / kPhi;
  for (double sx : {1.0, -1.0})
    for (double sy : {1.0, -1.0})
      for (double sz : {1.0, -1.0}) verts.push_back(Vec{sx, sy, sz});
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) {
      verts.push_back(Vec{0.0, s1 * inv, s2 * kPhi});
      verts.push_back(Vec{s1 * inv, s2 * kPhi, 0.0});
      verts.push_back(Vec{s2 * kPhi, 0.0, s1 * inv});
    }
  return verts;
}

std::vector<Vec> cell24_vertices() {
  std::vector<Vec> verts;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (double sa : {1.0, -1.0})
        for (double sb : {1.0, -1.0}) {
          Vec v(4);
          v[a] = sa;
          v[b] = sb;
          verts.push_back(v);
        }
  return verts;
}

// Face normals of a simplicial 3-polytope: every 3-clique of the edge graph
// is a face. Valid for the tetrahedron, octahedron and icosahedron.
std::vector<Vec> clique_face_normals(const std::vector<Vec>& vs,
                                     const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(vs.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [i, j] : edges) adj[i][j] = adj[j][i] = 1;
  std::vector<Vec> normals;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!adj[i][j]) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!adj[i][k] || !adj[j][k]) continue;
        const Vec a = vs[j] - vs[i];
        const Vec b = vs[k] - vs[i];
        Vec cr{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
               a[0] * b[1] - a[1] * b[0]};
        cr = normalized(cr);
        const Vec center = (1.0 / 3.0) * (vs[i] + vs[j] + vs[k]);
        if (dot(cr, center) < 0.0) cr *= -1.0;
        normals.push_back(cr);
      }
    }
  return normals;
}

std::vector<Vec> axis_normals(int n) {
  std::vector<Vec> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(axis_vec(n, i));
    out.push_back(-axis_vec(n, i));
  }
  return out;
}

std::vector<Vec> sign_vector_normals(int n) {
  std::vector<Vec> out = all_sign_vectors(n);
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  for (Vec& v : out) v *= inv;
  return out;
}

std::vector<Vec> cell24_normals() {
  std::vector<Vec> out = axis_normals(4);
  for (Vec v : all_sign_vectors(4)) out.push_back(0.5 * v);
  return out;
}

// Facet normals of the difference body of a regular simplex: one per proper
// nonempty vertex subset S, direction sum_{i in S} v_i. (In the Helmert
// embedding this is the projected characteristic vector of S.)
std::vector<Vec> simplex_diff_normals(const std::vector<Vec>& verts) {
  const int count = static_cast<int>(verts.size());
  const int n = verts[0].dim();
  std::vector<Vec> out;
  for (int mask = 1; mask < (1 << count) - 1; ++mask) {
    Vec s(n);
    for (int i = 0; i < count; ++i)
      if ((mask >> i) & 1) s += verts[i];
    out.push_back(normalized(s));
  }
  return out;
}

std::vector<Vec> dodecahedron_normals() {
  std::vector<Vec> out;
  const double len = std::sqrt(kPhi * kPhi + 1.0);
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) {
      out.push_back((1.0 / len) * Vec{0.0, s1 * kPhi, s2 * 1.0});
      out.push_back((1.0 / len) * Vec{s1 * kPhi, s2 * 1.0, 0.0});
      out.push_back((1.0 / len) * Vec{s2 * 1.0, 0.0, s1 * kPhi});
    }
  return out;
}

std::vector<Vec> polygon_diff_normals(const std::vector<Vec>& verts) {
  std::vector<Vec> diffs;
  const int n = static_cast<int>(verts.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) diffs.push_back(verts[j] - verts[i]);
  return hull_edge_normals_2d(diffs);
}

struct ParsedId {
  std::string family;  // canonical family key
  int param = 0;       // k for polygon, n for the generic families
  int dimension = 0;
};

ParsedId parse_id(const std::string& id) {
  auto suffixed = [&](const std::string& prefix, int min_param) -> int {
    const std::string head = prefix + ":";
    if (id.rfind(head, 0) != 0) return -1;
    const std::string tail = id.substr(head.size());
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad parameter in polytope id '" + id + "'");
    const int v = std::stoi(tail);
    if (v < min_param)
      throw UsageError("parameter too small in polytope id '" + id + "'");
    return v;
  };

  static const std::map<std::string, ParsedId> fixed = {
      {"triangle", {"polygon", 3, 2}},     {"square", {"hypercube", 2, 2}},
      {"pentagon", {"polygon", 5, 2}},     {"hexagon", {"polygon", 6, 2}},
      {"heptagon", {"polygon", 7, 2}},     {"octagon", {"polygon", 8, 2}},
      {"tetrahedron", {"simplex", 3, 3}},  {"cube", {"hypercube", 3, 3}},
      {"octahedron", {"orthoplex", 3, 3}}, {"icosahedron", {"icosahedron", 0, 3}},
      {"dodecahedron", {"dodecahedron", 0, 3}},
      {"5-cell", {"simplex", 4, 4}},       {"8-cell", {"hypercube", 4, 4}},
      {"16-cell", {"orthoplex", 4, 4}},    {"24-cell", {"24-cell", 0, 4}},
  };
  if (auto it = fixed.find(id); it != fixed.end()) return it->second;

  if (int k = suffixed("polygon", 3); k >= 0) return {"polygon", k, 2};
  if (int n = suffixed("simplex", 2); n >= 0) return {"simplex", n, n};
  if (int n = suffixed("hypercube", 2); n >= 0) return {"hypercube", n, n};
  if (int n = suffixed("orthoplex", 2); n >= 0) return {"orthoplex", n, n};
  throw UsageError("unknown polytope id '" + id + "'");
}

}  // namespace

Vec Polytope::centroid() const {
  Vec c(dimension);
  for (const Vec& v : vertices) c += v;
  return c * (1.0 / static_cast<double>(vertices.size()));
}

double Polytope::diameter() const {
  double d2 = 0.0;
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      d2 = std::max(d2, dist2(vertices[i], vertices[j]));
  return std::sqrt(d2);
}

double Polytope::support(const Vec& dir) const {
  double h = dot(dir, vertices[0]);
  for (const Vec& v : vertices) h = std::max(h, dot(dir, v));
  return h;
}

std::vector<std::pair<int, int>> detect_edges(std::span<const Vec> vertices) {
  const double dmin = min_pair_distance(vertices);
  const double tol = 1e-9 * dmin;
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(vertices.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(vertices[i], vertices[j]) <= dmin + tol) edges.emplace_back(i, j);
  return edges;
}

Polytope generate_polytope(const std::string& family, int dimension,
                           double edge_length) {
  if (!(edge_length > 0.0)) throw UsageError("edge length must be positive");
  const ParsedId parsed = parse_id(family);
  if (parsed.dimension != dimension)
    throw UsageError("polytope '" + family + "' lives in dimension " +
                     std::to_string(parsed.dimension) + ", not " +
                     std::to_string(dimension));
  if (dimension < 2 || dimension > kMaxDim)
    throw UsageError("supported dimensions are 2.." + std::to_string(kMaxDim));

  Polytope p;
  p.name = family;
  p.dimension = dimension;

  if (parsed.family == "polygon") {
    p.vertices = polygon_vertices(parsed.param);
  } else if (parsed.family == "simplex") {
    p.vertices = simplex_vertices(parsed.param);
  } else if (parsed.family == "hypercube") {
    p.vertices = all_sign_vectors(parsed.param);
  } else if (parsed.family == "orthoplex") {
    p.vertices.clear();
    for (int i = 0; i < parsed.param; ++i) {
      p.vertices.push_back(axis_vec(parsed.param, i));
      p.vertices.push_back(-axis_vec(parsed.param, i));
    }
  } else if (parsed.family == "icosahedron") {
    p.vertices = icosahedron_vertices();
  } else if (parsed.family == "dodecahedron") {
    p.vertices = dodecahedron_vertices();
  } else if (parsed.family == "24-cell") {
    p.vertices = cell24_vertices();
  }

  // Center, then rescale the minimal pairwise distance onto edge_length.
  Vec c(p.dimension);
  for (const Vec& v : p.vertices) c += v;
  c *= 1.0 / static_cast<double>(p.vertices.size());
  for (Vec& v : p.vertices) v -= c;

  const double natural = min_pair_distance(p.vertices);
  const double s = edge_length / natural;
  for (Vec& v : p.vertices) v *= s;

  p.edge_length = edge_length;
  p.edges = detect_edges(p.vertices);

  if (parsed.family == "polygon") {
    p.facet_normals = hull_edge_normals_2d(p.vertices);
    p.diff_facet_normals = polygon_diff_normals(p.vertices);
  } else if (parsed.family == "simplex") {
    for (const Vec& v : p.vertices) p.facet_normals.push_back(-normalized(v));
    p.diff_facet_normals = simplex_diff_normals(p.vertices);
  } else if (parsed.family == "hypercube") {
    p.facet_normals = axis_normals(dimension);
    p.diff_facet_normals = p.facet_normals;
  } else if (parsed.family == "orthoplex") {
    p.facet_normals = sign_vector_normals(dimension);
    p.diff_facet_normals = p.facet_normals;
  } else if (parsed.family == "icosahedron") {
    p.facet_normals = clique_face_normals(p.vertices, p.edges);
    p.diff_facet_normals = p.facet_normals;
  } else if (parsed.family == "dodecahedron") {
    p.facet_normals = dodecahedron_normals();
    p.diff_facet_normals = p.facet_normals;
  } else if (parsed.family == "24-cell") {
    p.facet_normals = cell24_normals();
    p.diff_facet_normals = p.facet_normals;
  }
  return p;
}

Polytope make_polytope(const std::string& id, double edge_length) {
  return generate_polytope(id, parse_id(id).dimension, edge_length);
}

Polytope orient_edge_to_axis(const Polytope& p) {
  if (p.edges.empty()) throw UsageError("orient_edge_to_axis: no edges");
  const double tol = 1e-9 * p.edge_length;

  auto off_axis = [&](const Vec& d) {
    double m = 0.0;
    for (int i = 1; i < d.dim(); ++i) m = std::max(m, std::fabs(d[i]));
    return m;
  };
  for (auto [i, j] : p.edges) {
    if (off_axis(p.vertices[j] - p.vertices[i]) <= tol) return p;
  }

  // Canonical edge: smallest (sorted endpoint coordinates) lexicographically.
  auto vec_less = [](const Vec& a, const Vec& b) {
    for (int i = 0; i < a.dim(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  };
  auto edge_key = [&](std::pair<int, int> e) {
    const Vec& a = p.vertices[e.first];
    const Vec& b = p.vertices[e.second];
    return vec_less(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  auto best = p.edges[0];
  for (const auto& e : p.edges) {
    auto [a1, b1] = edge_key(e);
    auto [a2, b2] = edge_key(best);
    if (vec_less(a1, a2) || (a1 == a2 && vec_less(b1, b2))) best = e;
  }
  auto [lo, hi] = edge_key(best);
  const Vec u = normalized(hi - lo);

  // Householder reflection taking u onto e1.
  Vec w = u - axis_vec(p.dimension, 0);
  const double w2 = norm2(w);
  Polytope out = p;
  if (w2 > 1e-24) {
    auto reflect = [&](Vec& v) { v -= (2.0 * dot(w, v) / w2) * w; };
    for (Vec& v : out.vertices) reflect(v);
    for (Vec& nrm : out.facet_normals) reflect(nrm);
    for (Vec& nrm : out.diff_facet_normals) reflect(nrm);
  }
  return out;
}

bool hull_contains(const Polytope& p, const Vec& x, double tol) {
  if (x.dim() != p.dimension) throw UsageError("hull_contains: dimension mismatch");
  if (!p.facet_normals.empty()) {
    for (const Vec& n : p.facet_normals)
      if (dot(n, x) > p.support(n) + tol) return false;
    return true;
  }
  return distance_to_hull(x, p.vertices).distance <= tol;
}

const std::vector<std::string>& catalog_table_ids() {
  static const std::vector<std::string> ids = {
      "triangle",    "square",      "pentagon",    "hexagon",
      "tetrahedron", "cube",        "octahedron",  "icosahedron", "dodecahedron",
      "5-cell",      "8-cell",      "16-cell",     "24-cell",
      "simplex:5",   "hypercube:5", "orthoplex:5",
  };
  return ids;
}

}  // namespace gcg
