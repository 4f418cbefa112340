// Command-line surface: ropt, tables, generate, search, verify, hutchinson.
// Exit codes: 0 success, 2 usage error, 3 numerical failure.

#include "gcg/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcg/chaos.hpp"
#include "gcg/error.hpp"
#include "gcg/hutchinson.hpp"
#include "gcg/io.hpp"
#include "gcg/overlap.hpp"
#include "gcg/polytope.hpp"
#include "gcg/ratio.hpp"

namespace gcg {

namespace {

using nlohmann::json;

std::string fmt12(double x) {
  char buf[48];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string pad(std::string s, size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

json ratio_record(const std::string& id, const Polytope& p, const RatioReport& r) {
  json j;
  j["schema"] = 1;
  j["record"] = "ratio";
  j["polytope"] = id;
  j["dimension"] = p.dimension;
  j["edge_length"] = r.edge_length;
  j["delta_parallel"] = r.delta_parallel;
  j["delta_over_ell"] = r.delta_parallel / r.edge_length;
  j["r_opt"] = r.r_opt;
  j["witness_pair"] = {r.witness_pair.first + 1, r.witness_pair.second + 1};
  j["witness_edge"] = {r.witness_edge.first + 1, r.witness_edge.second + 1};
  return j;
}

void print_ratio_header(std::ostream& out) {
  out << pad("polytope", 14) << pad("dim", 5) << pad("delta_par/ell", 18)
      << "r_opt\n";
}

void print_ratio_row(std::ostream& out, const std::string& id, const Polytope& p,
                     const RatioReport& r) {
  out << pad(id, 14) << pad(std::to_string(p.dimension), 5)
      << pad(fmt12(r.delta_parallel / r.edge_length), 18) << fmt12(r.r_opt)
      << "\n";
}

struct CommonOpts {
  std::string id;
  double edge = 1.0;
  double ratio = 0.5;
  long long iterations = 100000;
  long long discard = 6;
  std::uint64_t seed = 1;
  double tol = 1e-4;
  double rmin = 0.3;
  double rmax = 0.99;
  int level = 1;
  long long cap = kDefaultCopyCap;
  std::string out_path;
  std::string format;
  bool force = false;
};

void require_text_or_json(const std::string& format) {
  if (!format.empty() && format != "text" && format != "json")
    throw UsageError("format must be text or json");
}

int cmd_ropt(const CommonOpts& o, std::ostream& out) {
  require_text_or_json(o.format);
  const Polytope p = make_polytope(o.id, o.edge);
  const RatioReport r = compute_ratio_report(p);
  if (o.format == "json") {
    out << ratio_record(o.id, p, r).dump() << "\n";
  } else {
    print_ratio_header(out);
    print_ratio_row(out, o.id, p, r);
    out << ratio_record(o.id, p, r).dump() << "\n";
  }
  return 0;
}

int cmd_tables(const CommonOpts& o, std::ostream& out) {
  require_text_or_json(o.format);
  if (o.format != "json") print_ratio_header(out);
  for (const std::string& id : catalog_table_ids()) {
    const Polytope p = make_polytope(id, o.edge);
    const RatioReport r = compute_ratio_report(p);
    if (o.format == "json")
      out << ratio_record(id, p, r).dump() << "\n";
    else
      print_ratio_row(out, id, p, r);
  }
  return 0;
}

int cmd_generate(const CommonOpts& o, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const Polytope p = make_polytope(o.id, o.edge);
  std::string format = o.format.empty() ? "csv" : o.format;

  GcgConfig cfg;
  cfg.ratio = o.ratio;
  cfg.iterations = o.iterations;
  cfg.discard = o.discard;
  cfg.seed = o.seed;
  const PointCloud cloud = gcg_run(p, cfg);

  std::string bytes;
  if (format == "csv")
    bytes = render_cloud_csv(cloud);
  else if (format == "ply")
    bytes = render_cloud_ply(cloud);
  else if (format == "svg")
    bytes = render_cloud_svg(cloud, p);
  else
    throw UsageError("generate: format must be csv, ply or svg");
  write_file_bytes(o.out_path, bytes, o.force);

  RunManifest m;
  m.command = "generate";
  m.polytope = o.id;
  m.ratio = o.ratio;
  m.iterations = o.iterations;
  m.discard = o.discard;
  m.seed = o.seed;
  m.outputs.push_back(
      ManifestOutput{o.out_path, sha256_hex(bytes), bytes.size()});
  m.duration_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  const std::string mjson = manifest_to_json(m);
  write_file_bytes(o.out_path + ".manifest.json", mjson, o.force);
  out << mjson << "\n";
  return 0;
}

json search_record(const std::string& id, const SearchResult& res) {
  json j;
  j["schema"] = 1;
  j["record"] = "search";
  j["polytope"] = id;
  j["tolerance"] = res.tolerance;
  j["r_low"] = res.r_low;
  j["r_high"] = res.r_high;
  j["r_estimate"] = res.r_estimate;
  j["probes"] = json::array();
  for (const SearchProbe& probe : res.probes) {
    json pj;
    pj["r"] = probe.r;
    pj["overlap"] = !probe.verdict.overlapping_pairs.empty();
    if (!probe.verdict.overlapping_pairs.empty()) {
      pj["witness"] = {probe.verdict.overlapping_pairs[0].first + 1,
                       probe.verdict.overlapping_pairs[0].second + 1};
      pj["margin"] = probe.verdict.max_penetration;
    }
    j["probes"].push_back(pj);
  }
  return j;
}

int cmd_search(const CommonOpts& o, std::ostream& out) {
  require_text_or_json(o.format);
  const Polytope p = make_polytope(o.id, o.edge);
  const SearchResult res = search_r_opt(p, o.tol, o.rmin, o.rmax);
  if (o.format != "json") {
    int k = 0;
    for (const SearchProbe& probe : res.probes) {
      out << "probe " << pad(std::to_string(++k), 4) << "r=" << fmt12(probe.r);
      if (!probe.verdict.overlapping_pairs.empty())
        out << "  overlap  witness=(" << probe.verdict.overlapping_pairs[0].first + 1
            << "," << probe.verdict.overlapping_pairs[0].second + 1 << ")";
      else
        out << "  clear";
      out << "\n";
    }
    out << "r_estimate=" << fmt12(res.r_estimate) << "  bracket=[" << fmt12(res.r_low)
        << "," << fmt12(res.r_high) << "]  width=" << fmt12(res.tolerance)
        << "  probes=" << res.probes.size() << "\n";
  }
  out << search_record(o.id, res).dump() << "\n";
  return 0;
}

int cmd_verify(const CommonOpts& o, std::ostream& out) {
  require_text_or_json(o.format);
  const Polytope p = make_polytope(o.id, o.edge);
  const OverlapVerdict v = any_overlap_at(p, o.ratio);
  const long long pairs =
      static_cast<long long>(p.vertex_count()) * (p.vertex_count() - 1) / 2;
  json j;
  j["schema"] = 1;
  j["record"] = "verify";
  j["polytope"] = o.id;
  j["r"] = o.ratio;
  j["pair_count"] = pairs;
  j["overlap"] = !v.overlapping_pairs.empty();
  j["max_penetration"] = v.max_penetration;
  j["overlapping_pairs"] = json::array();
  for (auto [a, b] : v.overlapping_pairs)
    j["overlapping_pairs"].push_back({a + 1, b + 1});
  if (o.format != "json") {
    out << "polytope=" << o.id << " r=" << fmt12(o.ratio) << " pairs=" << pairs
        << " overlapping=" << v.overlapping_pairs.size()
        << " max_penetration=" << fmt12(v.max_penetration) << "\n";
    size_t shown = 0;
    for (auto [a, b] : v.overlapping_pairs) {
      if (shown++ == 20) {
        out << "  ...\n";
        break;
      }
      out << "  overlap pair (" << a + 1 << "," << b + 1 << ")\n";
    }
  }
  out << j.dump() << "\n";
  return 0;
}

int cmd_hutchinson(const CommonOpts& o, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const Polytope p = make_polytope(o.id, o.edge);
  const CopySet c = hutchinson_iterate(p, o.ratio, o.level, o.cap);

  std::string format = o.format.empty() ? (p.dimension == 2 ? "svg" : "csv") : o.format;
  std::string bytes;
  if (format == "svg")
    bytes = render_copies_svg(c, p);
  else if (format == "csv")
    bytes = render_copies_csv(c);
  else
    throw UsageError("hutchinson: format must be svg or csv");
  write_file_bytes(o.out_path, bytes, o.force);

  RunManifest m;
  m.command = "hutchinson";
  m.polytope = o.id;
  m.ratio = o.ratio;
  m.level = o.level;
  m.outputs.push_back(ManifestOutput{o.out_path, sha256_hex(bytes), bytes.size()});
  m.duration_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  const std::string mjson = manifest_to_json(m);
  write_file_bytes(o.out_path + ".manifest.json", mjson, o.force);
  out << mjson << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"generalized chaos game toolkit"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_format = [&](CLI::App* cmd, const std::string& allowed) {
    cmd->add_option("--format", o.format, "output format (" + allowed + ")");
  };

  CLI::App* ropt = app.add_subcommand("ropt", "closed-form optimal ratio for one polytope");
  ropt->add_option("id", o.id, "polytope identifier")->required();
  ropt->add_option("--edge", o.edge, "edge length");
  add_format(ropt, "text|json");

  CLI::App* tables = app.add_subcommand("tables", "optimal ratios across the catalog");
  tables->add_option("--edge", o.edge, "edge length");
  add_format(tables, "text|json");

  CLI::App* gen = app.add_subcommand("generate", "run the chaos game and write a point cloud");
  gen->add_option("id", o.id, "polytope identifier")->required();
  gen->add_option("--r", o.ratio, "contraction ratio in (0,1)")->required();
  gen->add_option("--iterations", o.iterations, "total iterations");
  gen->add_option("--discard", o.discard, "leading points to discard");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--edge", o.edge, "edge length");
  gen->add_option("--out", o.out_path, "output path")->required();
  gen->add_flag("--force", o.force, "overwrite existing outputs");
  add_format(gen, "csv|ply|svg");

  CLI::App* search = app.add_subcommand("search", "bisection search for the optimal ratio");
  search->add_option("id", o.id, "polytope identifier")->required();
  search->add_option("--tol", o.tol, "bracket tolerance");
  search->add_option("--rmin", o.rmin, "initial overlapping ratio");
  search->add_option("--rmax", o.rmax, "initial clear ratio");
  search->add_option("--edge", o.edge, "edge length");
  add_format(search, "text|json");

  CLI::App* verify = app.add_subcommand("verify", "overlap verdict at a fixed ratio");
  verify->add_option("id", o.id, "polytope identifier")->required();
  verify->add_option("--r", o.ratio, "contraction ratio in (0,1)")->required();
  verify->add_option("--edge", o.edge, "edge length");
  add_format(verify, "text|json");

  CLI::App* hutch = app.add_subcommand("hutchinson", "deterministic level-k copies");
  hutch->add_option("id", o.id, "polytope identifier")->required();
  hutch->add_option("--r", o.ratio, "contraction ratio in (0,1)")->required();
  hutch->add_option("--level", o.level, "iteration level")->required();
  hutch->add_option("--cap", o.cap, "copy-count cap");
  hutch->add_option("--edge", o.edge, "edge length");
  hutch->add_option("--out", o.out_path, "output path")->required();
  hutch->add_flag("--force", o.force, "overwrite existing outputs");
  add_format(hutch, "svg|csv");

  std::vector<const char*> argv;
  argv.push_back("gcg");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (ropt->parsed()) return cmd_ropt(o, out);
    if (tables->parsed()) return cmd_tables(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (hutch->parsed()) return cmd_hutchinson(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace gcg
