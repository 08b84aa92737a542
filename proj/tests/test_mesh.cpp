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
#include <cmath>
#include <cstdint>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "oloid/elliptic.hpp"
#include "oloid/montecarlo.hpp"

namespace oloid {
namespace {

const OloidSpec kUnit{};

// Hand-built closed meshes with known mass properties exercise the signed
// tetrahedron sums independently of the tessellator.
TriangleMesh make_box(const Vec3& lo, const Vec3& hi) {
  TriangleMesh mesh;
  for (int corner = 0; corner < 8; ++corner) {
    mesh.vertices.push_back(Vec3{corner & 1 ? hi.x : lo.x,
                                 corner & 2 ? hi.y : lo.y,
                                 corner & 4 ? hi.z : lo.z});
  }
  mesh.triangles = {
      {0, 2, 1}, {1, 2, 3},  // z = lo
      {4, 5, 6}, {5, 7, 6},  // z = hi
      {0, 1, 4}, {1, 5, 4},  // y = lo
      {2, 6, 3}, {3, 6, 7},  // y = hi
      {0, 4, 2}, {2, 4, 6},  // x = lo
      {1, 3, 5}, {3, 7, 5},  // x = hi
  };
  return mesh;
}

TriangleMesh make_octahedron() {
  TriangleMesh mesh;
  mesh.vertices = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                   {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
  mesh.triangles = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                    {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  return mesh;
}

TEST(PolyhedralIntegrals, CenteredUnitCube) {
  const TriangleMesh cube =
      make_box(Vec3{-0.5, -0.5, -0.5}, Vec3{0.5, 0.5, 0.5});
  const MassProperties props = mesh_mass_properties(cube, 2.0);
  EXPECT_NEAR(props.volume, 1.0, 1e-15);
  EXPECT_NEAR(norm(props.center_of_mass), 0.0, 1e-15);
  // I_xx = rho * (1/12 + 1/12) for the unit cube.
  EXPECT_NEAR(props.inertia.xx, 2.0 / 6.0, 1e-15);
  EXPECT_NEAR(props.inertia.yy, 2.0 / 6.0, 1e-15);
  EXPECT_NEAR(props.inertia.zz, 2.0 / 6.0, 1e-15);
  EXPECT_NEAR(props.inertia.xy, 0.0, 1e-15);
  EXPECT_NEAR(props.area, 6.0, 1e-14);
  EXPECT_EQ(props.method, Method::kMesh);
}

TEST(PolyhedralIntegrals, ShiftedCubeProductsOfInertia) {
  // For the cube on [0,1]^3 about the origin: integral of xy = 1/4, so
  // I_xy = -rho/4; diagonal entries are 2/3 rho.
  const TriangleMesh cube = make_box(Vec3{0, 0, 0}, Vec3{1, 1, 1});
  const MassProperties props = mesh_mass_properties(cube, 1.0);
  EXPECT_NEAR(props.volume, 1.0, 1e-15);
  EXPECT_NEAR(props.center_of_mass.x, 0.5, 1e-15);
  EXPECT_NEAR(props.center_of_mass.y, 0.5, 1e-15);
  EXPECT_NEAR(props.center_of_mass.z, 0.5, 1e-15);
  EXPECT_NEAR(props.inertia.xx, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(props.inertia.xy, -0.25, 1e-15);
  EXPECT_NEAR(props.inertia.xz, -0.25, 1e-15);
  EXPECT_NEAR(props.inertia.yz, -0.25, 1e-15);
}

TEST(PolyhedralIntegrals, Octahedron) {
  const MassProperties props = mesh_mass_properties(make_octahedron(), 1.0);
  EXPECT_NEAR(props.volume, 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(props.inertia.xx, 4.0 / 15.0, 1e-15);
  EXPECT_NEAR(props.inertia.yy, 4.0 / 15.0, 1e-15);
  EXPECT_NEAR(props.inertia.zz, 4.0 / 15.0, 1e-15);
  EXPECT_NEAR(norm(props.center_of_mass), 0.0, 1e-15);
  EXPECT_NEAR(props.area, 8.0 * std::sqrt(3.0) / 2.0, 1e-14);
}

TEST(PolyhedralIntegrals, RejectsOpenMesh) {
  TriangleMesh cube = make_box(Vec3{-0.5, -0.5, -0.5}, Vec3{0.5, 0.5, 0.5});
  cube.triangles.pop_back();
  EXPECT_THROW(mesh_mass_properties(cube, 1.0), TessellationError);
}

TEST(PolyhedralIntegrals, RejectsFlippedTriangle) {
  TriangleMesh cube = make_box(Vec3{-0.5, -0.5, -0.5}, Vec3{0.5, 0.5, 0.5});
  std::swap(cube.triangles.back()[0], cube.triangles.back()[1]);
  EXPECT_THROW(mesh_mass_properties(cube, 1.0), TessellationError);
}

TEST(PolyhedralIntegrals, RejectsBadIndexAndBadDensity) {
  TriangleMesh cube = make_box(Vec3{-0.5, -0.5, -0.5}, Vec3{0.5, 0.5, 0.5});
  EXPECT_THROW(mesh_mass_properties(cube, 0.0), std::domain_error);
  cube.triangles.back()[2] = 99;
  EXPECT_THROW(mesh_mass_properties(cube, 1.0), TessellationError);
}

TEST(Topology, CubeAndOctahedron) {
  const MeshTopology cube =
      analyze_topology(make_box(Vec3{0, 0, 0}, Vec3{1, 1, 1}));
  EXPECT_EQ(cube.vertex_count, 8);
  EXPECT_EQ(cube.edge_count, 18);
  EXPECT_EQ(cube.triangle_count, 12);
  EXPECT_EQ(cube.euler_characteristic, 2);
  EXPECT_TRUE(cube.watertight);
  EXPECT_TRUE(cube.oriented);
  EXPECT_TRUE(cube.outward);

  const MeshTopology oct = analyze_topology(make_octahedron());
  EXPECT_EQ(oct.vertex_count, 6);
  EXPECT_EQ(oct.edge_count, 12);
  EXPECT_EQ(oct.triangle_count, 8);
  EXPECT_EQ(oct.euler_characteristic, 2);
  EXPECT_TRUE(oct.watertight);
}

TEST(Topology, EmptyMeshIsNotWatertight) {
  EXPECT_FALSE(analyze_topology(TriangleMesh{}).watertight);
}

TEST(Tessellate, CountsAndTopology) {
  MeshConfig cfg;
  cfg.n_m = 8;
  cfg.n_t = 16;
  const TriangleMesh mesh = tessellate(kUnit, cfg);
  EXPECT_EQ(mesh.vertices.size(), 2u * 8u * 16u + 2u);
  EXPECT_EQ(mesh.triangles.size(), 4u * 8u * 16u);
  EXPECT_EQ(mesh.provenance.size(), mesh.vertices.size());

  const MeshTopology topo = analyze_topology(mesh);
  EXPECT_EQ(topo.euler_characteristic, 2);
  EXPECT_TRUE(topo.watertight);
  EXPECT_TRUE(topo.oriented);
  EXPECT_TRUE(topo.outward);
}

TEST(Tessellate, VerticesOnHullBoundary) {
  MeshConfig cfg;
  cfg.n_m = 16;
  cfg.n_t = 32;
  const TriangleMesh mesh = tessellate(kUnit, cfg);
  McConfig mc;
  for (const Vec3& v : mesh.vertices) {
    const MembershipResult res = contains(v, kUnit, mc, 1e-6);
    EXPECT_EQ(res.classification, Classification::kBoundary)
        << "vertex (" << v.x << ", " << v.y << ", " << v.z
        << ") margin " << res.margin;
  }
}

TEST(Tessellate, MirrorSymmetricVertexSets) {
  MeshConfig cfg;
  cfg.n_m = 6;
  cfg.n_t = 12;
  const TriangleMesh mesh = tessellate(kUnit, cfg);
  std::vector<Vec3> verts = mesh.vertices;
  const auto less = [](const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  };
  std::sort(verts.begin(), verts.end(), less);
  for (const auto reflect : {0, 1}) {
    std::vector<Vec3> mirrored;
    mirrored.reserve(verts.size());
    for (const Vec3& v : verts) {
      mirrored.push_back(reflect == 0 ? Vec3{v.x, -v.y, v.z}
                                      : Vec3{v.x, v.y, -v.z});
    }
    std::sort(mirrored.begin(), mirrored.end(), less);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      EXPECT_EQ(verts[i].x, mirrored[i].x);
      EXPECT_EQ(verts[i].y, mirrored[i].y);
      EXPECT_EQ(verts[i].z, mirrored[i].z);
    }
  }
}

TEST(Tessellate, ConfigValidation) {
  MeshConfig bad;
  bad.n_m = 1;
  EXPECT_THROW(tessellate(kUnit, bad), std::domain_error);
  bad = MeshConfig{};
  bad.n_t = 5;  // must be even
  EXPECT_THROW(tessellate(kUnit, bad), std::domain_error);
  bad = MeshConfig{};
  bad.n_t = 2;  // below minimum
  EXPECT_THROW(tessellate(kUnit, bad), std::domain_error);
  bad = MeshConfig{};
  bad.weld_tolerance = 0.0;
  EXPECT_THROW(tessellate(kUnit, bad), std::domain_error);
}

TEST(MeshProperties, ApproachClosedFormFromBelow) {
  const MassProperties cf = closed_form_properties(kUnit);
  double prev_vol = 0.0;
  double prev_err = 1.0;
  for (const int n : {8, 16, 32}) {
    MeshConfig cfg;
    cfg.n_m = n;
    cfg.n_t = 2 * n;
    const MassProperties props =
        mesh_mass_properties(tessellate(kUnit, cfg), 1.0);
    EXPECT_LT(props.volume, cf.volume);   // inscribed
    EXPECT_GT(props.volume, prev_vol);    // monotone refinement
    const double err = (cf.volume - props.volume) / cf.volume;
    EXPECT_LT(err, 0.35 * prev_err);      // near second-order convergence
    prev_vol = props.volume;
    prev_err = err;
  }
}

TEST(MeshProperties, SymmetryDegeneraciesSurviveDiscretization) {
  MeshConfig cfg;
  cfg.n_m = 24;
  cfg.n_t = 48;
  const MassProperties props =
      mesh_mass_properties(tessellate(kUnit, cfg), 1.0);
  EXPECT_NEAR(props.inertia.yy, props.inertia.zz,
              1e-13 * props.inertia.yy);
  EXPECT_NEAR(props.inertia.xy, 0.0, 1e-13);
  EXPECT_NEAR(props.inertia.xz, 0.0, 1e-13);
  EXPECT_NEAR(props.inertia.yz, 0.0, 1e-13);
  EXPECT_NEAR(norm(props.center_of_mass), 0.0, 1e-13);
}

TEST(MeshProperties, ConvexityViolationShrinksWithRefinement) {
  MeshConfig coarse;
  coarse.n_m = 16;
  coarse.n_t = 32;
  MeshConfig fine;
  fine.n_m = 64;
  fine.n_t = 128;
  const double v_coarse = max_convexity_violation(tessellate(kUnit, coarse));
  const double v_fine = max_convexity_violation(tessellate(kUnit, fine));
  EXPECT_GE(v_coarse, 0.0);
  EXPECT_LT(v_fine, v_coarse);
  EXPECT_LT(v_fine, 1e-4);
}

TEST(Export, StlByteLayout) {
  MeshConfig cfg;
  cfg.n_m = 4;
  cfg.n_t = 8;
  const TriangleMesh mesh = tessellate(kUnit, cfg);
  std::ostringstream out(std::ios::binary);
  const std::size_t bytes = export_mesh(mesh, MeshFormat::kStlBinary, out);
  const std::string blob = out.str();
  ASSERT_EQ(blob.size(), bytes);
  ASSERT_EQ(bytes, 84u + 50u * mesh.triangles.size());
  std::uint32_t count = 0;
  std::memcpy(&count, blob.data() + 80, 4);
  EXPECT_EQ(count, mesh.triangles.size());
}

TEST(Export, ObjRoundTripsExactly) {
  MeshConfig cfg;
  cfg.n_m = 3;
  cfg.n_t = 6;
  const TriangleMesh mesh = tessellate(kUnit, cfg);
  std::ostringstream out;
  export_mesh(mesh, MeshFormat::kObj, out);

  std::istringstream in(out.str());
  std::vector<Vec3> verts;
  std::vector<std::array<int, 3>> faces;
  std::string tag;
  while (in >> tag) {
    if (tag == "v") {
      Vec3 v;
      in >> v.x >> v.y >> v.z;
      verts.push_back(v);
    } else if (tag == "f") {
      std::array<int, 3> f{};
      in >> f[0] >> f[1] >> f[2];
      faces.push_back(f);
    }
  }
  ASSERT_EQ(verts.size(), mesh.vertices.size());
  ASSERT_EQ(faces.size(), mesh.triangles.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    EXPECT_EQ(verts[i].x, mesh.vertices[i].x);  // 17 digits round-trip
    EXPECT_EQ(verts[i].y, mesh.vertices[i].y);
    EXPECT_EQ(verts[i].z, mesh.vertices[i].z);
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    EXPECT_EQ(faces[i][0] - 1, mesh.triangles[i][0]);  // OBJ is 1-based
    EXPECT_EQ(faces[i][1] - 1, mesh.triangles[i][1]);
    EXPECT_EQ(faces[i][2] - 1, mesh.triangles[i][2]);
  }
}

TEST(Export, PathOverloadAndIoErrors) {
  MeshConfig cfg;
  cfg.n_m = 2;
  cfg.n_t = 4;
  const TriangleMesh mesh = tessellate(kUnit, cfg);
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "oloid_export_test.stl";
  const std::size_t bytes = export_mesh(mesh, MeshFormat::kStlBinary, path);
  EXPECT_EQ(std::filesystem::file_size(path), bytes);
  std::filesystem::remove(path);

  EXPECT_THROW(export_mesh(mesh, MeshFormat::kStlBinary,
                           "/nonexistent_dir_zz/out.stl"),
               std::runtime_error);
}

TEST(MeshProperties, MatchesQuadratureAtModerateResolution) {
  MeshConfig cfg;
  cfg.n_m = 64;
  cfg.n_t = 128;
  const MassProperties mesh_props =
      mesh_mass_properties(tessellate(kUnit, cfg), 1.0);
  const MassProperties cf = closed_form_properties(kUnit);
  EXPECT_NEAR(mesh_props.volume, cf.volume, cf.volume * 5e-4);
  EXPECT_NEAR(mesh_props.inertia.xx, cf.inertia.xx, cf.inertia.xx * 1e-3);
  EXPECT_NEAR(mesh_props.area, cf.area, cf.area * 5e-4);
}

}  // namespace
}  // namespace oloid
