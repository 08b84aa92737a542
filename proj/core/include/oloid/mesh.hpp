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

#ifndef OLOID_MESH_HPP_
#define OLOID_MESH_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "oloid/surface.hpp"
#include "oloid/types.hpp"

namespace oloid {

struct MeshConfig {
  int n_m = 64;   // subdivisions along the rulings, >= 2
  int n_t = 128;  // subdivisions across rulings, even, >= 4
  // Verification bound for seam identification, relative to the radius.
  // Vertices are welded by index (never by coordinate comparison); every
  // parameter pair that lands on an existing weld must reproduce the stored
  // position within this bound or tessellate throws TessellationError.
  double weld_tolerance = 1e-12;
};

// Parameters a vertex was generated from.
struct VertexTag {
  double m = 0.0;
  double t = 0.0;
  SheetSign sheet = SheetSign::kUpper;
};

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;  // CCW from outside
  std::vector<VertexTag> provenance;          // one tag per vertex
};

// Watertight triangulation of the surface: 2 n_m n_t + 2 vertices and
// 4 n_m n_t triangles, Euler characteristic 2, every triangle wound
// outward.  The cross-ruling grid is graded toward the singular edge and
// symmetric under the isometries of the solid, so the discrete inertia
// tensor keeps the exact symmetry degeneracies of the continuum; each quad
// is split along the diagonal that keeps the hull convex.  The discrete
// volume underestimates the true volume (vertices lie on the surface of a
// convex body) and increases monotonically under refinement.
TriangleMesh tessellate(const OloidSpec& spec, const MeshConfig& cfg);

// Mass properties of the enclosed solid by signed tetrahedra against the
// origin, with the inertia tensor about the origin.  Requires a watertight
// input; throws TessellationError otherwise.
MassProperties mesh_mass_properties(const TriangleMesh& mesh, double density);

struct MeshTopology {
  int vertex_count = 0;
  int edge_count = 0;
  int triangle_count = 0;
  int euler_characteristic = 0;
  bool watertight = false;  // every edge shared by exactly two triangles
  bool oriented = false;    // every directed edge used exactly once
  bool outward = false;     // signed volume positive
};
MeshTopology analyze_topology(const TriangleMesh& mesh);

// Largest signed distance by which any hull vertex rises above the plane of
// any triangle (0 for a perfectly convex mesh, up to rounding).  Vertex
// candidates are reduced to the rim rows (m = 0, m = 1 and the apex): every
// other vertex is a convex combination of those along its ruling, so the
// reduction is exact.
double max_convexity_violation(const TriangleMesh& mesh);

enum class MeshFormat {
  kStlBinary,
  kObj,
};

// Writes the mesh and returns the number of bytes produced.  Binary STL is
// the 80-byte header / uint32 count / 50-byte record layout; OBJ is ASCII
// with positions at 17 significant digits (exact double round trip).
std::size_t export_mesh(const TriangleMesh& mesh, MeshFormat format,
                        std::ostream& out);
std::size_t export_mesh(const TriangleMesh& mesh, MeshFormat format,
                        const std::filesystem::path& path);

}  // namespace oloid

#endif  // OLOID_MESH_HPP_
