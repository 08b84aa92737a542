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

#ifndef OLOID_TYPES_HPP_
#define OLOID_TYPES_HPP_

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "oloid/vec3.hpp"

namespace oloid {

// Thrown when a parametrization or integrand is evaluated at a point where
// it is not defined (e.g. surface tangents on the lateral edge of the
// parameter domain).
struct SingularityError : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown when a mesh fails a structural guarantee (failed weld, or mass
// properties requested for a non-watertight mesh).
struct TessellationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a user-supplied integrand produces a non-finite value at an
// interior node.
struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The solid: convex hull of two unit-radius circles in perpendicular planes,
// each passing through the other's center.  With radius r the generating
// circles are
//   C1: center (-r/2, 0, 0), in the z = 0 plane,
//   C2: center (+r/2, 0, 0), in the y = 0 plane.
struct OloidSpec {
  double radius = 1.0;
  double density = 1.0;

  void validate() const {
    if (!(std::isfinite(radius) && radius > 0.0)) {
      throw std::domain_error("OloidSpec: radius must be finite and > 0");
    }
    if (!(std::isfinite(density) && density > 0.0)) {
      throw std::domain_error("OloidSpec: density must be finite and > 0");
    }
  }
};

enum class Method {
  kClosedForm,
  kQuadrature,
  kMonteCarlo,
  kMesh,
};

inline std::string method_name(Method m) {
  switch (m) {
    case Method::kClosedForm:
      return "closed_form";
    case Method::kQuadrature:
      return "quadrature";
    case Method::kMonteCarlo:
      return "monte_carlo";
    case Method::kMesh:
      return "mesh";
  }
  return "unknown";
}

// Symmetric 3x3 tensor, stored as the six independent components.
struct SymMat3 {
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;
  double xy = 0.0;
  double xz = 0.0;
  double yz = 0.0;
};

// One-standard-error estimates attached to Monte Carlo results.
struct MassPropertyErrors {
  double area = 0.0;
  double volume = 0.0;
  Vec3 center_of_mass;
  SymMat3 inertia;
};

// Mass properties of the solid.  The inertia tensor is taken about the
// centroid (which coincides with the coordinate origin by symmetry) in the
// body frame of the two generating circles.
struct MassProperties {
  double area = 0.0;
  double volume = 0.0;
  Vec3 center_of_mass;
  SymMat3 inertia;
  Method method = Method::kClosedForm;
  std::optional<MassPropertyErrors> std_error;
};

}  // namespace oloid

#endif  // OLOID_TYPES_HPP_
