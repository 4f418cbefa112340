// Artifact writers and checksums. All text output goes through
// std::to_chars so results do not depend on locale or printf quirks.

#include "gcg/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "gcg/error.hpp"

namespace gcg {

const std::array<Rgb, 12>& color_palette() {
  static const std::array<Rgb, 12> palette = {{
      {0x1f, 0x77, 0xb4}, {0xff, 0x7f, 0x0e}, {0x2c, 0xa0, 0x2c},
      {0xd6, 0x27, 0x28}, {0x94, 0x67, 0xbd}, {0x8c, 0x56, 0x4b},
      {0xe3, 0x77, 0xc2}, {0x7f, 0x7f, 0x7f}, {0xbc, 0xbd, 0x22},
      {0x17, 0xbe, 0xcf}, {0xae, 0xc7, 0xe8}, {0xff, 0xbb, 0x78},
  }};
  return palette;
}

namespace {

std::string format_general(double x, int precision) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_double17(double x) { return format_general(x, 17); }

// ---------------------------------------------------------------------------
// SHA-256 (FIPS 180-4), block-at-a-time.

namespace {

constexpr std::uint32_t kSha256K[64] = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
    0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
    0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
    0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
    0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
    0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
    0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
    0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

inline std::uint32_t rotr(std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

struct Sha256 {
  std::uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                        0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
  unsigned char block[64];
  std::size_t block_len = 0;
  std::uint64_t total = 0;

  void process(const unsigned char* p) {
    std::uint32_t w[64];
    for (int i = 0; i < 16; ++i)
      w[i] = (std::uint32_t(p[4 * i]) << 24) | (std::uint32_t(p[4 * i + 1]) << 16) |
             (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
    for (int i = 16; i < 64; ++i) {
      const std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
      const std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
      w[i] = w[i - 16] + s0 + w[i - 7] + s1;
    }
    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5],
                  g = h[6], hh = h[7];
    for (int i = 0; i < 64; ++i) {
      const std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
      const std::uint32_t ch = (e & f) ^ (~e & g);
      const std::uint32_t t1 = hh + s1 + ch + kSha256K[i] + w[i];
      const std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
      const std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
      const std::uint32_t t2 = s0 + maj;
      hh = g;
      g = f;
      f = e;
      e = d + t1;
      d = c;
      c = b;
      b = a;
      a = t1 + t2;
    }
    h[0] += a; h[1] += b; h[2] += c; h[3] += d;
    h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
  }

  void update(const void* data, std::size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    total += len;
    while (len > 0) {
      const std::size_t take = std::min(len, std::size_t(64) - block_len);
      std::memcpy(block + block_len, p, take);
      block_len += take;
      p += take;
      len -= take;
      if (block_len == 64) {
        process(block);
        block_len = 0;
      }
    }
  }

  std::string finish() {
    const std::uint64_t bits = total * 8;
    unsigned char pad = 0x80;
    update(&pad, 1);
    const unsigned char zero = 0;
    while (block_len != 56) update(&zero, 1);
    unsigned char len_be[8];
    for (int i = 0; i < 8; ++i) len_be[i] = static_cast<unsigned char>(bits >> (56 - 8 * i));
    update(len_be, 8);
    static const char* hexd = "0123456789abcdef";
    std::string out(64, '0');
    for (int i = 0; i < 8; ++i)
      for (int b = 0; b < 4; ++b) {
        const unsigned byte = (h[i] >> (24 - 8 * b)) & 0xff;
        out[8 * i + 2 * b] = hexd[byte >> 4];
        out[8 * i + 2 * b + 1] = hexd[byte & 0xf];
      }
    return out;
  }
};

}  // namespace

std::string sha256_hex(const void* data, std::size_t len) {
  Sha256 s;
  s.update(data, len);
  return s.finish();
}

std::string sha256_hex(const std::string& s) { return sha256_hex(s.data(), s.size()); }

std::string sha256_file_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  Sha256 s;
  char buf[65536];
  while (in.read(buf, sizeof buf) || in.gcount() > 0)
    s.update(buf, static_cast<std::size_t>(in.gcount()));
  return s.finish();
}

void write_file_bytes(const std::string& path, const std::string& bytes, bool force) {
  if (!force) {
    std::ifstream probe(path);
    if (probe.good())
      throw UsageError("output '" + path + "' exists; pass --force to overwrite");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw UsageError("short write to '" + path + "'");
}

// ---------------------------------------------------------------------------
// Renderers.

std::string render_cloud_csv(const PointCloud& cloud) {
  std::string out;
  out.reserve(cloud.points.size() * 24 * (cloud.dimension + 1));
  for (int i = 0; i < cloud.dimension; ++i) {
    out += 'x';
    out += std::to_string(i + 1);
    out += ',';
  }
  out += "vertex\n";
  for (size_t k = 0; k < cloud.points.size(); ++k) {
    for (int i = 0; i < cloud.dimension; ++i) {
      out += format_double17(cloud.points[k][i]);
      out += ',';
    }
    out += std::to_string(cloud.vertex_labels[k]);
    out += '\n';
  }
  return out;
}

namespace {

void append_le_float(std::string& out, float f) {
  static_assert(sizeof(float) == 4);
  unsigned char bytes[4];
  std::memcpy(bytes, &f, 4);
  if constexpr (std::endian::native == std::endian::big) std::swap(bytes[0], bytes[3]), std::swap(bytes[1], bytes[2]);
  out.append(reinterpret_cast<char*>(bytes), 4);
}

}  // namespace

std::string render_cloud_ply(const PointCloud& cloud) {
  if (cloud.dimension != 3)
    throw UsageError("PLY output requires a 3-dimensional point cloud");
  std::string out;
  out += "ply\nformat binary_little_endian 1.0\n";
  out += "element vertex " + std::to_string(cloud.points.size()) + "\n";
  out += "property float x\nproperty float y\nproperty float z\n";
  out += "property uchar red\nproperty uchar green\nproperty uchar blue\n";
  out += "end_header\n";
  const auto& palette = color_palette();
  for (size_t k = 0; k < cloud.points.size(); ++k) {
    for (int i = 0; i < 3; ++i)
      append_le_float(out, static_cast<float>(cloud.points[k][i]));
    const Rgb c = palette[(cloud.vertex_labels[k] - 1) % 12];
    out.push_back(static_cast<char>(c.r));
    out.push_back(static_cast<char>(c.g));
    out.push_back(static_cast<char>(c.b));
  }
  return out;
}

namespace {

struct ViewBox {
  double x0, y0, w, h;  // padded, for the viewBox attribute
  double ysum;          // y0_raw + y1_raw, for the vertical flip
};

ViewBox view_box_for(const Polytope& p) {
  double x0 = p.vertices[0][0], x1 = x0, y0 = p.vertices[0][1], y1 = y0;
  for (const Vec& v : p.vertices) {
    x0 = std::min(x0, v[0]);
    x1 = std::max(x1, v[0]);
    y0 = std::min(y0, v[1]);
    y1 = std::max(y1, v[1]);
  }
  const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
  return ViewBox{x0 - pad, y0 - pad, (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad,
                 y0 + y1};
}

std::string fmt6(double x) { return format_general(x, 6); }

std::string rgb_hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return std::string(buf);
}

}  // namespace

std::string render_cloud_svg(const PointCloud& cloud, const Polytope& p) {
  if (cloud.dimension != 2)
    throw UsageError("SVG output requires a 2-dimensional point cloud");
  const ViewBox vb = view_box_for(p);
  const double radius = 0.003 * std::max(vb.w, vb.h);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt6(vb.x0) + " " +
         fmt6(vb.y0) + " " + fmt6(vb.w) + " " + fmt6(vb.h) + "\">\n";
  const auto& palette = color_palette();
  for (size_t k = 0; k < cloud.points.size(); ++k) {
    const double cx = cloud.points[k][0];
    const double cy = vb.ysum - cloud.points[k][1];  // mathematical orientation
    out += "<circle cx=\"" + fmt6(cx) + "\" cy=\"" + fmt6(cy) + "\" r=\"" +
           fmt6(radius) + "\" fill=\"" +
           rgb_hex(palette[(cloud.vertex_labels[k] - 1) % 12]) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

namespace {

std::string ancestry_string(const std::vector<int>& ancestry) {
  if (ancestry.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < ancestry.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(ancestry[i] + 1);
  }
  return s;
}

}  // namespace

std::string render_copies_csv(const CopySet& c) {
  if (c.copies.empty()) throw UsageError("copy set is empty");
  const int dim = c.copies[0].vertices[0].dim();
  std::string out;
  for (int i = 0; i < dim; ++i) {
    out += 'x';
    out += std::to_string(i + 1);
    out += ',';
  }
  out += "ancestry\n";
  for (const PolytopeCopy& copy : c.copies) {
    const std::string anc = ancestry_string(copy.ancestry);
    for (const Vec& v : copy.vertices) {
      for (int i = 0; i < dim; ++i) {
        out += format_double17(v[i]);
        out += ',';
      }
      out += anc;
      out += '\n';
    }
  }
  return out;
}

std::string render_copies_svg(const CopySet& c, const Polytope& p) {
  if (p.dimension != 2)
    throw UsageError("SVG outlines require a 2-dimensional polytope");
  const ViewBox vb = view_box_for(p);
  const double stroke = 0.002 * std::max(vb.w, vb.h);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt6(vb.x0) + " " +
         fmt6(vb.y0) + " " + fmt6(vb.w) + " " + fmt6(vb.h) + "\">\n";
  for (const PolytopeCopy& copy : c.copies) {
    out += "<polygon points=\"";
    for (size_t i = 0; i < copy.vertices.size(); ++i) {
      if (i) out += ' ';
      out += fmt6(copy.vertices[i][0]) + "," + fmt6(vb.ysum - copy.vertices[i][1]);
    }
    out += "\" fill=\"none\" stroke=\"#202020\" stroke-width=\"" + fmt6(stroke) +
           "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string manifest_to_json(const RunManifest& m) {
  nlohmann::json j;
  j["schema"] = 1;
  j["record"] = "manifest";
  j["command"] = m.command;
  j["polytope"] = m.polytope;
  nlohmann::json params;
  params["r"] = m.ratio;
  params["iterations"] = m.iterations;
  params["discard"] = m.discard;
  params["seed"] = m.seed;
  params["tolerance"] = m.tolerance;
  params["level"] = m.level;
  j["parameters"] = params;
  j["outputs"] = nlohmann::json::array();
  for (const ManifestOutput& o : m.outputs)
    j["outputs"].push_back({{"path", o.path}, {"sha256", o.sha256}, {"bytes", o.bytes}});
  j["duration_ms"] = m.duration_ms;
  return j.dump();
}

}  // namespace gcg
