// Acceptance suite. Each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gcg/chaos.hpp"
#include "gcg/cli.hpp"
#include "gcg/hutchinson.hpp"
#include "gcg/io.hpp"
#include "gcg/overlap.hpp"
#include "gcg/polytope.hpp"
#include "gcg/ratio.hpp"
#include "gcg/rng.hpp"

namespace fs = std::filesystem;
using namespace gcg;

namespace {

constexpr double kPhi = 1.6180339887498948482045868343656381;

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

bool check(bool cond, std::string& why, const std::string& detail) {
  if (!cond && why.empty()) why = detail;
  return cond;
}

// --- 1: closed-form tables ---------------------------------------------

bool criterion_tables(std::string& why) {
  struct Row {
    const char* id;
    double delta_over_ell;
    double r_opt;
  };
  const std::vector<Row> rows = {
      {"triangle", 1.0, 0.5},
      {"square", 1.0, 0.5},
      {"pentagon", kPhi, 1.0 / kPhi},
      {"hexagon", 2.0, 2.0 / 3.0},
      {"tetrahedron", 1.0, 0.5},
      {"cube", 1.0, 0.5},
      {"octahedron", 1.0, 0.5},
      {"icosahedron", kPhi, 1.0 / kPhi},
      {"dodecahedron", kPhi + 1.0, (kPhi + 1.0) / (kPhi + 2.0)},
      {"5-cell", 1.0, 0.5},
      {"8-cell", 1.0, 0.5},
      {"16-cell", 1.0, 0.5},
      {"24-cell", 2.0, 2.0 / 3.0},
      {"simplex:5", 1.0, 0.5},
      {"hypercube:5", 1.0, 0.5},
      {"orthoplex:5", 1.0, 0.5},
  };
  bool ok = true;
  for (const Row& row : rows) {
    const RatioReport r = compute_ratio_report(make_polytope(row.id, 1.0));
    ok &= check(std::fabs(r.delta_parallel / r.edge_length - row.delta_over_ell) <= 1e-12,
                why, std::string(row.id) + ": delta/ell off");
    ok &= check(std::fabs(r.r_opt - row.r_opt) <= 1e-12, why,
                std::string(row.id) + ": r_opt off");
  }
  // the CLI `tables` path runs the same rows end to end
  std::ostringstream out, err;
  ok &= check(run_cli({"tables"}, out, err) == 0, why, "tables command failed");
  return ok;
}

// --- 2: worked icosahedron example --------------------------------------

bool criterion_icosahedron(std::string& why) {
  const Polytope p = generate_polytope("icosahedron", 3, 2.0);
  const Polytope oriented = orient_edge_to_axis(p);
  const auto [a, b] = build_vector_sets(oriented);
  const double exact = delta_parallel(a, b).delta;
  const double axis = delta_parallel_axis(oriented);
  bool ok = true;
  ok &= check(std::fabs(exact - 2.0 * kPhi) <= 1e-9, why, "exact delta not 2*phi");
  ok &= check(std::fabs(axis - 2.0 * kPhi) <= 1e-9, why, "axis delta not 2*phi");
  ok &= check(std::fabs(exact - axis) <= 1e-9 * exact, why, "methods disagree");
  ok &= check(std::fabs(r_opt_formula(exact, 2.0) - 1.0 / kPhi) <= 1e-9, why,
              "r_opt not 1/phi");
  return ok;
}

// --- 3: bisection agrees with the formula -------------------------------

bool criterion_search_agreement(std::string& why) {
  bool ok = true;
  const std::vector<std::string> low_dim = {
      "polygon:3", "polygon:4", "polygon:5", "polygon:6", "polygon:7", "polygon:8",
      "tetrahedron", "cube", "octahedron", "icosahedron", "dodecahedron"};
  for (const std::string& id : low_dim) {
    const Polytope p = make_polytope(id, 1.0);
    const double formula = compute_ratio_report(p).r_opt;
    const SearchResult res = search_r_opt(p, 1e-4);
    ok &= check(std::fabs(res.r_estimate - formula) <= 2e-4, why,
                id + ": search/formula gap above 2e-4");
  }
  const std::vector<std::string> high_dim = {
      "5-cell", "8-cell", "16-cell", "24-cell",
      "simplex:5", "hypercube:5", "orthoplex:5"};
  for (const std::string& id : high_dim) {
    const Polytope p = make_polytope(id, 1.0);
    const double formula = compute_ratio_report(p).r_opt;
    const SearchResult res = search_r_opt(p, 1e-2);
    ok &= check(std::fabs(res.r_estimate - formula) <= 1e-2, why,
                id + ": search/formula gap above 1e-2");
  }
  return ok;
}

// --- 4: dodecahedron contrast -------------------------------------------

bool criterion_dodecahedron_contrast(std::string& why) {
  const Polytope p = make_polytope("dodecahedron", 1.0);
  bool ok = true;
  ok &= check(any_overlap_at(p, 0.7370).overlapping_pairs.empty(), why,
              "r = 0.7370 should not overlap");
  ok &= check(!any_overlap_at(p, 0.7200).overlapping_pairs.empty(), why,
              "r = 0.7200 should overlap");
  return ok;
}

// --- 5: property bundle --------------------------------------------------

bool criterion_properties(std::string& why) {
  bool ok = true;
  Rng rng(20240808);

  // contraction factor exact to 1e-12
  for (int t = 0; t < 300; ++t) {
    const int dim = 2 + static_cast<int>(rng.bounded(4));
    const double r = 0.05 + 0.9 * rng.uniform01();
    Vec x(dim), y(dim), v(dim);
    for (int i = 0; i < dim; ++i) {
      x[i] = 2.0 * rng.uniform01() - 1.0;
      y[i] = 2.0 * rng.uniform01() - 1.0;
      v[i] = 2.0 * rng.uniform01() - 1.0;
    }
    const double before = dist(x, y);
    const double after = dist(gcg_step(x, v, r), gcg_step(y, v, r));
    ok &= check(std::fabs(after - (1.0 - r) * before) <= 1e-12 * std::max(before, 1.0),
                why, "contraction factor off");
  }

  // |A| = C(V,2) for every catalog entry
  for (const std::string& id : catalog_table_ids()) {
    const Polytope p = make_polytope(id, 1.0);
    const auto [a, b] = build_vector_sets(p);
    const size_t v = static_cast<size_t>(p.vertex_count());
    ok &= check(a.vectors.size() == v * (v - 1) / 2, why, id + ": |A| != C(V,2)");
    ok &= check(b.vectors.size() == p.edges.size(), why, id + ": |B| != edges");
  }

  // copy count V^k, edge scaling (1-r)^k, k <= 5 within a copy budget
  for (const std::string& id : catalog_table_ids()) {
    const Polytope p = make_polytope(id, 1.0);
    const double r = 0.5;
    long long expected = 1;
    for (int k = 0; k <= 5; ++k) {
      if (expected > 100000) break;  // stay at desk scale for the big families
      const CopySet c = hutchinson_iterate(p, r, k);
      ok &= check(static_cast<long long>(c.copies.size()) == expected, why,
                  id + ": copy count != V^k");
      const double scale = std::pow(1.0 - r, k) * p.edge_length;
      const auto [ei, ej] = p.edges[0];
      for (const PolytopeCopy& copy : c.copies) {
        const double len = dist(copy.vertices[ei], copy.vertices[ej]);
        if (std::fabs(len - scale) > 1e-9 * std::max(scale, 1.0)) {
          ok = check(false, why, id + ": copy edge scale off");
          break;
        }
      }
      expected *= p.vertex_count();
    }
  }

  // Hausdorff axioms on random triples
  for (int t = 0; t < 30; ++t) {
    std::vector<Vec> a, b, c;
    for (int i = 0; i < 25; ++i) {
      Vec pa(3), pb(3), pc(3);
      for (int k = 0; k < 3; ++k) {
        pa[k] = rng.uniform01();
        pb[k] = rng.uniform01();
        pc[k] = rng.uniform01();
      }
      a.push_back(pa);
      b.push_back(pb);
      c.push_back(pc);
    }
    ok &= check(hausdorff_distance(a, a) == 0.0, why, "h(A,A) != 0");
    ok &= check(hausdorff_distance(a, b) == hausdorff_distance(b, a), why,
                "h not symmetric");
    ok &= check(hausdorff_distance(a, c) <=
                    hausdorff_distance(a, b) + hausdorff_distance(b, c) + 1e-12,
                why, "triangle inequality violated");
  }

  // level-k confinement of chaos points at discard = k = 6
  const int k = 6;
  for (const std::string id : {"triangle", "square"}) {
    const Polytope p = make_polytope(id, 1.0);
    GcgConfig cfg;
    cfg.ratio = 0.5;
    cfg.iterations = 3000;
    cfg.discard = k;
    cfg.seed = 515;
    const PointCloud cloud = gcg_run(p, cfg);
    const double tol = 1e-9 * p.diameter();
    for (size_t c = k - 1; c < cloud.points.size(); ++c) {
      std::vector<Vec> copy = p.vertices;
      for (size_t s = c - (k - 1); s <= c; ++s)
        for (Vec& q : copy)
          q = gcg_step(q, p.vertices[cloud.vertex_labels[s] - 1], cfg.ratio);
      bool inside = true;
      for (const Vec& nrm : p.facet_normals) {
        double h = dot(nrm, copy[0]);
        for (const Vec& q : copy) h = std::max(h, dot(nrm, q));
        if (dot(nrm, cloud.points[c]) > h + tol) inside = false;
      }
      if (!inside) {
        ok = check(false, why, id + ": point escapes its level-6 copy");
        break;
      }
    }
  }
  return ok;
}

// --- 6: artifact determinism ---------------------------------------------

bool criterion_determinism(std::string& why) {
  const fs::path dir = fs::temp_directory_path() / "gcg_acceptance";
  fs::create_directories(dir);
  const fs::path out1 = dir / "det_a.csv";
  const fs::path out2 = dir / "det_b.csv";
  for (const fs::path& f : {out1, out2}) {
    fs::remove(f);
    fs::remove(f.string() + ".manifest.json");
  }
  bool ok = true;
  for (const fs::path& f : {out1, out2}) {
    std::ostringstream out, err;
    const int code = run_cli({"generate", "triangle", "--r", "0.5", "--iterations",
                              "20000", "--seed", "42", "--out", f.string()},
                             out, err);
    ok &= check(code == 0, why, "generate failed: " + err.str());
  }
  if (ok)
    ok &= check(sha256_file_hex(out1.string()) == sha256_file_hex(out2.string()),
                why, "checksums differ between identical runs");
  return ok;
}

// --- 7: structural figure parity -----------------------------------------

bool criterion_structural(std::string& why) {
  const Polytope p = make_polytope("triangle", 1.0);
  GcgConfig cfg;
  cfg.ratio = 0.5;
  cfg.iterations = 50000;
  cfg.seed = 1234;
  const PointCloud cloud = gcg_run(p, cfg);
  const double margin = 1e-9;
  for (size_t i = 0; i < cloud.points.size(); ++i) {
    const int own = cloud.vertex_labels[i] - 1;
    for (int j = 0; j < 3; ++j) {
      if (j == own) continue;
      bool strictly_inside = true;
      for (const Vec& nrm : p.facet_normals) {
        const double offset = 0.5 * p.support(nrm) + 0.5 * dot(nrm, p.vertices[j]);
        if (dot(nrm, cloud.points[i]) > offset - margin) {
          strictly_inside = false;
          break;
        }
      }
      if (strictly_inside)
        return check(false, why, "point strictly inside a foreign level-1 copy");
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "tables-reproduction", 5.0, criterion_tables},
      {2, "icosahedron-worked-example", 1.0, criterion_icosahedron},
      {3, "search-formula-agreement", 600.0, criterion_search_agreement},
      {4, "dodecahedron-contrast", 60.0, criterion_dodecahedron_contrast},
      {5, "property-suite", 600.0, criterion_properties},
      {6, "artifact-determinism", 60.0, criterion_determinism},
      {7, "structural-figure-parity", 120.0, criterion_structural},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (seconds > c.budget_seconds) {
      ok = false;
      if (why.empty())
        why = "runtime " + std::to_string(seconds) + " s over budget of " +
              std::to_string(c.budget_seconds) + " s";
    }
    std::printf("%s  %d  %-28s  (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.name.c_str(), seconds, why.empty() ? "" : "  -- ",
                why.c_str());
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
