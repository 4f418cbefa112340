#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gcg/chaos.hpp"
#include "gcg/hutchinson.hpp"
#include "gcg/polytope.hpp"

namespace gcg {

// Fixed per-vertex color palette; label L uses palette[(L - 1) % 12].
struct Rgb {
  std::uint8_t r, g, b;
};
const std::array<Rgb, 12>& color_palette();

// Locale-independent shortest-exact decimal with 17 significant digits;
// round-trips every double bit-exactly.
std::string format_double17(double x);

// SHA-256 as lowercase hex.
std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(const std::string& s);
std::string sha256_file_hex(const std::string& path);

// Refuses to overwrite unless allowed; used by every artifact writer.
void write_file_bytes(const std::string& path, const std::string& bytes, bool force);

// Point-cloud artifacts. CSV carries header x1,..,xn,vertex with 1-based
// vertex labels; PLY is binary little-endian with uchar RGB (3D only);
// SVG plots filled circles in a 5%-padded, y-flipped view box (2D only).
std::string render_cloud_csv(const PointCloud& cloud);
std::string render_cloud_ply(const PointCloud& cloud);
std::string render_cloud_svg(const PointCloud& cloud, const Polytope& p);

// Copy-set artifacts: polygon outlines (2D) or a CSV with an `ancestry`
// column of dot-separated 1-based vertex indices.
std::string render_copies_csv(const CopySet& c);
std::string render_copies_svg(const CopySet& c, const Polytope& p);

struct ManifestOutput {
  std::string path;
  std::string sha256;
  std::uint64_t bytes = 0;
};

// Record of one CLI run: command, parameters, emitted artifacts with
// checksums, and wall-clock duration. Serialized as a single JSON object.
struct RunManifest {
  std::string command;
  std::string polytope;
  double ratio = 0.0;
  long long iterations = 0;
  long long discard = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  int level = 0;
  std::vector<ManifestOutput> outputs;
  double duration_ms = 0.0;
};

std::string manifest_to_json(const RunManifest& m);

}  // namespace gcg
