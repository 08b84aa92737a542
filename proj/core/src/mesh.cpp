// Copyright 2026 The Oloid Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oloid/mesh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace oloid {

namespace {

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double total() const { return sum + comp; }
};

// The isometry that swaps the two generating circles maps the ruling at t
// to the ruling at phi(t) = acos(-cos t / (1 + cos t)); phi is an involution
// of [0, t_max] exchanging the endpoints.  u(t) = t - phi(t) is odd under
// phi, so a grid built from a u-symmetric node set is carried onto itself by
// the swap and the discrete model inherits the exact I_yy = I_zz degeneracy.
double ruling_swap(double t) {
  const double c = std::cos(t);
  return std::acos(std::clamp(-c / (1.0 + c), -1.0, 1.0));
}

double u_inverse(double target) {
  double lo = 0.0;
  double hi = t_max;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) {
      break;
    }
    if (mid - ruling_swap(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Cross-ruling nodes: blended odd grading in u (half linear, half sine)
// packs rulings toward the singular edge, where the hull corners sharpest,
// without starving the mid band.  Antisymmetric by construction, so
// t[n_t - j] == -t[j] exactly.
std::vector<double> t_grid(int n_t) {
  const int half = n_t / 2;
  std::vector<double> s(half + 1);
  s[0] = 0.0;
  s[half] = t_max;
  for (int k = 1; k < half; ++k) {
    const double w = -1.0 + 2.0 * static_cast<double>(k) / half;
    const double u =
        t_max * (0.5 * w + 0.5 * std::sin(0.5 * std::numbers::pi * w));
    s[k] = u_inverse(u);
  }
  std::vector<double> t(n_t + 1);
  for (int j = 0; j < half; ++j) {
    t[j] = -s[half - j];
  }
  for (int j = half; j <= n_t; ++j) {
    t[j] = s[j - half];
  }
  return t;
}

void check_mesh_config(const MeshConfig& cfg) {
  if (cfg.n_m < 2 || cfg.n_m > 1000000) {
    throw std::domain_error("MeshConfig: n_m must be in [2, 1000000]");
  }
  if (cfg.n_t < 4 || cfg.n_t % 2 != 0 || cfg.n_t > 1000000) {
    throw std::domain_error(
        "MeshConfig: n_t must be even and in [4, 1000000]");
  }
  if (!(std::isfinite(cfg.weld_tolerance) && cfg.weld_tolerance > 0.0)) {
    throw std::domain_error(
        "MeshConfig: weld_tolerance must be finite and > 0");
  }
}

std::uint64_t edge_key(int a, int b, std::uint64_t n) {
  const std::uint64_t lo = static_cast<std::uint64_t>(std::min(a, b));
  const std::uint64_t hi = static_cast<std::uint64_t>(std::max(a, b));
  return lo * n + hi;
}

}  // namespace

TriangleMesh tessellate(const OloidSpec& spec, const MeshConfig& cfg) {
  spec.validate();
  check_mesh_config(cfg);
  const int n_m = cfg.n_m;
  const int n_t = cfg.n_t;
  const double r = spec.radius;
  const std::vector<double> tg = t_grid(n_t);
  std::vector<double> mg(n_m + 1);
  for (int i = 0; i <= n_m; ++i) {
    mg[i] = static_cast<double>(i) / n_m;
  }

  TriangleMesh mesh;
  mesh.vertices.reserve(2 * n_m * n_t + 2);
  mesh.provenance.reserve(2 * n_m * n_t + 2);
  mesh.triangles.reserve(4 * n_m * n_t);
  std::unordered_map<std::uint64_t, int> vid_map;
  vid_map.reserve(2 * n_m * n_t + 2);

  // Vertices are welded purely by index: seam-incident parameter pairs are
  // canonicalized to one key per geometric vertex (m = 0 arc and the
  // t = +-t_max ruling are sheet-shared; the m = 1 arc is double covered
  // within each sheet; the apex is one point).  Every arrival then verifies
  // that its own parameters reproduce the stored position.
  const auto vid = [&](int sheet, int i, int j) {
    const Vec3 orig = position(
        mg[i], tg[j], sheet == 0 ? SheetSign::kUpper : SheetSign::kLower,
        spec);
    int cs = sheet;
    int ci = i;
    int cj = j;
    if (ci == 0 || cj == 0 || cj == n_t) {
      cs = 0;
    }
    bool is_apex = false;
    if (ci == n_m) {
      cj = std::min(cj, n_t - cj);
      if (cj == 0) {
        is_apex = true;
        cs = 0;
      }
    }
    const std::uint64_t key = (static_cast<std::uint64_t>(cs) << 42) |
                              (static_cast<std::uint64_t>(ci) << 21) |
                              static_cast<std::uint64_t>(cj);
    int index;
    const auto it = vid_map.find(key);
    if (it != vid_map.end()) {
      index = it->second;
    } else {
      Vec3 pos;
      if (is_apex) {
        pos = Vec3{1.5 * r, 0.0, 0.0};
      } else if (cs == sheet && ci == i && cj == j) {
        pos = orig;
      } else {
        pos = position(mg[ci], tg[cj],
                       cs == 0 ? SheetSign::kUpper : SheetSign::kLower,
                       spec);
      }
      index = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back(pos);
      mesh.provenance.push_back(VertexTag{
          mg[ci], tg[cj], cs == 0 ? SheetSign::kUpper : SheetSign::kLower});
      vid_map.emplace(key, index);
    }
    const Vec3 stored = mesh.vertices[index];
    if (norm(orig - stored) > cfg.weld_tolerance * r) {
      throw TessellationError("tessellate: weld verification failed");
    }
    return index;
  };

  for (int sheet = 0; sheet < 2; ++sheet) {
    for (int i = 0; i < n_m; ++i) {
      for (int j = 0; j < n_t; ++j) {
        const int ia = vid(sheet, i, j);
        const int ib = vid(sheet, i + 1, j);
        const int ic = vid(sheet, i + 1, j + 1);
        const int id = vid(sheet, i, j + 1);
        const Vec3& a = mesh.vertices[ia];
        const Vec3& b = mesh.vertices[ib];
        const Vec3& c = mesh.vertices[ic];
        const Vec3& d = mesh.vertices[id];
        Vec3 nrm = cross(b - a, c - a);
        if (sheet == 1) {
          nrm = -nrm;
        }
        // Split along the diagonal that keeps the quad's fold convex
        // outward; the two candidate diagonals disagree only by the sign of
        // the tetrahedral volume below.
        const bool use_ac = dot(nrm, d - a) <= 0.0;
        std::array<std::array<int, 3>, 2> quad_tris;
        if (use_ac) {
          if (sheet == 0) {
            quad_tris = {{{ia, ib, ic}, {ia, ic, id}}};
          } else {
            quad_tris = {{{ia, ic, ib}, {ia, id, ic}}};
          }
        } else {
          if (sheet == 0) {
            quad_tris = {{{ib, ic, id}, {ib, id, ia}}};
          } else {
            quad_tris = {{{ib, id, ic}, {ib, ia, id}}};
          }
        }
        for (const auto& tri : quad_tris) {
          if (tri[0] != tri[1] && tri[1] != tri[2] && tri[0] != tri[2]) {
            mesh.triangles.push_back(tri);
          }
        }
      }
    }
  }
  return mesh;
}

MeshTopology analyze_topology(const TriangleMesh& mesh) {
  const int v_count = static_cast<int>(mesh.vertices.size());
  const std::uint64_t n = static_cast<std::uint64_t>(v_count) + 1;
  std::unordered_map<std::uint64_t, int> undirected;
  std::unordered_map<std::uint64_t, int> directed;
  undirected.reserve(mesh.triangles.size() * 2);
  directed.reserve(mesh.triangles.size() * 3);
  Neumaier signed_six_volume;
  for (const auto& tri : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      const int a = tri[e];
      const int b = tri[(e + 1) % 3];
      if (a < 0 || b < 0 || a >= v_count || b >= v_count) {
        throw TessellationError("analyze_topology: triangle index range");
      }
      ++undirected[edge_key(a, b, n)];
      ++directed[static_cast<std::uint64_t>(a) * n +
                 static_cast<std::uint64_t>(b)];
    }
    const Vec3& v1 = mesh.vertices[tri[0]];
    const Vec3& v2 = mesh.vertices[tri[1]];
    const Vec3& v3 = mesh.vertices[tri[2]];
    signed_six_volume.add(dot(v1, cross(v2, v3)));
  }

  MeshTopology topo;
  topo.vertex_count = v_count;
  topo.edge_count = static_cast<int>(undirected.size());
  topo.triangle_count = static_cast<int>(mesh.triangles.size());
  topo.euler_characteristic =
      topo.vertex_count - topo.edge_count + topo.triangle_count;
  topo.watertight = !mesh.triangles.empty();
  for (const auto& kv : undirected) {
    if (kv.second != 2) {
      topo.watertight = false;
      break;
    }
  }
  topo.oriented = true;
  for (const auto& kv : directed) {
    if (kv.second != 1) {
      topo.oriented = false;
      break;
    }
  }
  topo.outward = signed_six_volume.total() > 0.0;
  return topo;
}

MassProperties mesh_mass_properties(const TriangleMesh& mesh,
                                    double density) {
  if (!(std::isfinite(density) && density > 0.0)) {
    throw std::domain_error(
        "mesh_mass_properties: density must be finite and > 0");
  }
  const MeshTopology topo = analyze_topology(mesh);
  if (!topo.watertight) {
    throw TessellationError(
        "mesh_mass_properties: mesh is not watertight");
  }
  if (!topo.oriented) {
    throw TessellationError(
        "mesh_mass_properties: inconsistent triangle orientation");
  }

  // Signed tetrahedra against the origin; per-tetra polynomial moments.
  Neumaier six_vol;
  Neumaier first[3];
  Neumaier second[3];
  Neumaier product[3];
  Neumaier area;
  for (const auto& tri : mesh.triangles) {
    const Vec3& v1 = mesh.vertices[tri[0]];
    const Vec3& v2 = mesh.vertices[tri[1]];
    const Vec3& v3 = mesh.vertices[tri[2]];
    const double det = dot(v1, cross(v2, v3));
    const Vec3 v4 = v1 + v2 + v3;
    six_vol.add(det);
    first[0].add(det * v4.x);
    first[1].add(det * v4.y);
    first[2].add(det * v4.z);
    second[0].add(det * (v1.x * v1.x + v2.x * v2.x + v3.x * v3.x +
                         v4.x * v4.x));
    second[1].add(det * (v1.y * v1.y + v2.y * v2.y + v3.y * v3.y +
                         v4.y * v4.y));
    second[2].add(det * (v1.z * v1.z + v2.z * v2.z + v3.z * v3.z +
                         v4.z * v4.z));
    product[0].add(det * (v1.x * v1.y + v2.x * v2.y + v3.x * v3.y +
                          v4.x * v4.y));
    product[1].add(det * (v1.x * v1.z + v2.x * v2.z + v3.x * v3.z +
                          v4.x * v4.z));
    product[2].add(det * (v1.y * v1.z + v2.y * v2.z + v3.y * v3.z +
                          v4.y * v4.z));
    area.add(0.5 * norm(cross(v2 - v1, v3 - v1)));
  }

  const double volume = six_vol.total() / 6.0;
  if (volume == 0.0) {
    throw TessellationError("mesh_mass_properties: zero enclosed volume");
  }
  const double qxx = second[0].total() / 120.0;
  const double qyy = second[1].total() / 120.0;
  const double qzz = second[2].total() / 120.0;

  MassProperties props;
  props.method = Method::kMesh;
  props.area = area.total();
  props.volume = volume;
  props.center_of_mass = Vec3{first[0].total(), first[1].total(),
                              first[2].total()} /
                         (24.0 * volume);
  props.inertia.xx = density * (qyy + qzz);
  props.inertia.yy = density * (qxx + qzz);
  props.inertia.zz = density * (qxx + qyy);
  props.inertia.xy = -density * product[0].total() / 120.0;
  props.inertia.xz = -density * product[1].total() / 120.0;
  props.inertia.yz = -density * product[2].total() / 120.0;
  return props;
}

double max_convexity_violation(const TriangleMesh& mesh) {
  // Candidate vertices: the rim rows when provenance is available (exact
  // reduction: interior vertices are convex combinations of ruling
  // endpoints), otherwise every vertex.
  std::vector<Vec3> candidates;
  if (mesh.provenance.size() == mesh.vertices.size()) {
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
      const double m = mesh.provenance[i].m;
      if (m == 0.0 || m == 1.0) {
        candidates.push_back(mesh.vertices[i]);
      }
    }
  }
  if (candidates.empty()) {
    candidates = mesh.vertices;
  }

  double worst = 0.0;
  for (const auto& tri : mesh.triangles) {
    const Vec3& a = mesh.vertices[tri[0]];
    const Vec3& b = mesh.vertices[tri[1]];
    const Vec3& c = mesh.vertices[tri[2]];
    const Vec3 n = cross(b - a, c - a);
    const double len = norm(n);
    if (len == 0.0) {
      continue;
    }
    const Vec3 unit = n / len;
    const double d = dot(unit, a);
    for (const Vec3& cand : candidates) {
      worst = std::max(worst, dot(unit, cand) - d);
    }
  }
  return worst;
}

namespace {

std::string render_stl(const TriangleMesh& mesh) {
  static_assert(std::endian::native == std::endian::little,
                "binary STL writer assumes a little-endian host");
  const std::uint32_t count = static_cast<std::uint32_t>(
      mesh.triangles.size());
  std::string out;
  out.resize(84 + 50 * static_cast<std::size_t>(count), '\0');
  const char header[] = "binary STL triangle mesh";
  std::memcpy(out.data(), header, sizeof(header) - 1);
  std::memcpy(out.data() + 80, &count, 4);
  std::size_t off = 84;
  const auto put_f32 = [&](double v) {
    const float f = static_cast<float>(v);
    std::memcpy(out.data() + off, &f, 4);
    off += 4;
  };
  for (const auto& tri : mesh.triangles) {
    const Vec3& a = mesh.vertices[tri[0]];
    const Vec3& b = mesh.vertices[tri[1]];
    const Vec3& c = mesh.vertices[tri[2]];
    const Vec3 n = cross(b - a, c - a);
    const double len = norm(n);
    const Vec3 unit = len > 0.0 ? n / len : Vec3{0.0, 0.0, 0.0};
    put_f32(unit.x);
    put_f32(unit.y);
    put_f32(unit.z);
    for (const Vec3* v : {&a, &b, &c}) {
      put_f32(v->x);
      put_f32(v->y);
      put_f32(v->z);
    }
    off += 2;  // attribute byte count stays zero
  }
  return out;
}

std::string render_obj(const TriangleMesh& mesh) {
  std::string out;
  out.reserve(mesh.vertices.size() * 80 + mesh.triangles.size() * 36);
  char line[128];
  for (const Vec3& v : mesh.vertices) {
    std::snprintf(line, sizeof(line), "v %.17g %.17g %.17g\n", v.x, v.y,
                  v.z);
    out += line;
  }
  for (const auto& tri : mesh.triangles) {
    std::snprintf(line, sizeof(line), "f %d %d %d\n", tri[0] + 1,
                  tri[1] + 1, tri[2] + 1);
    out += line;
  }
  return out;
}

}  // namespace

std::size_t export_mesh(const TriangleMesh& mesh, MeshFormat format,
                        std::ostream& out) {
  for (const auto& tri : mesh.triangles) {
    for (const int idx : tri) {
      if (idx < 0 || idx >= static_cast<int>(mesh.vertices.size())) {
        throw TessellationError("export_mesh: triangle index range");
      }
    }
  }
  const std::string payload =
      format == MeshFormat::kStlBinary ? render_stl(mesh) : render_obj(mesh);
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) {
    throw std::runtime_error("export_mesh: write failed");
  }
  return payload.size();
}

std::size_t export_mesh(const TriangleMesh& mesh, MeshFormat format,
                        const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("export_mesh: cannot open " + path.string());
  }
  const std::size_t bytes = export_mesh(mesh, format, file);
  file.flush();
  if (!file) {
    throw std::runtime_error("export_mesh: write failed for " +
                             path.string());
  }
  return bytes;
}

}  // namespace oloid
