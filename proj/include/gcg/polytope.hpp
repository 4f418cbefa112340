#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcg/vec.hpp"

namespace gcg {

// A regular polytope: vertex coordinates, edge list, and the facet data the
// geometry kernels need. Vertices are centered on the origin; `edges` holds
// index pairs (i, j) with i < j, each at distance `edge_length`.
//
// `facet_normals` are the outward unit facet normals of the polytope itself;
// `diff_facet_normals` are the full facet-normal set of the difference body
// P (+) -P. Both are populated by the catalog builders and carried through
// rotations, so downstream code never has to recover facet structure from
// raw vertices in dimensions above two.
struct Polytope {
  std::string name;
  int dimension = 0;
  std::vector<Vec> vertices;
  std::vector<std::pair<int, int>> edges;
  double edge_length = 0.0;
  std::vector<Vec> facet_normals;
  std::vector<Vec> diff_facet_normals;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  Vec centroid() const;
  double diameter() const;
  // Support function max_v <dir, v> over the vertices.
  double support(const Vec& dir) const;
};

// Builds a catalog polytope scaled to the requested edge length.
//
// Families: polygon:<k> (dimension 2), tetrahedron/cube/octahedron/
// icosahedron/dodecahedron (dimension 3), 5-cell/8-cell/16-cell/24-cell
// (dimension 4), simplex:<n>/hypercube:<n>/orthoplex:<n> (dimension n >= 2).
// Aliases triangle/square/pentagon/hexagon/heptagon/octagon name the small
// polygons. Throws UsageError for unknown ids or family/dimension mismatch.
Polytope generate_polytope(const std::string& family, int dimension,
                           double edge_length);

// Same, with the dimension derived from the identifier.
Polytope make_polytope(const std::string& id, double edge_length);

// All vertex pairs at the minimal pairwise distance (relative tolerance
// 1e-9). Throws UsageError on fewer than two vertices or duplicates.
std::vector<std::pair<int, int>> detect_edges(std::span<const Vec> vertices);

// Rotates the polytope so that some edge is parallel to the first axis. If
// one already is, returns the input unchanged. The rotation is a Householder
// reflection, so all distances are preserved; facet normal sets are rotated
// along with the vertices.
Polytope orient_edge_to_axis(const Polytope& p);

// Convex-hull membership within absolute tolerance `tol`, tested against the
// facet planes when available and against a hull projection otherwise.
bool hull_contains(const Polytope& p, const Vec& x, double tol);

// Identifiers of the catalog rows reported by the `tables` command, in
// table order: the 2D polygons, the 3D solids, the 4D cells, the 5D families.
const std::vector<std::string>& catalog_table_ids();

}  // namespace gcg
