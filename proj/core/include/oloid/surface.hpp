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

#ifndef OLOID_SURFACE_HPP_
#define OLOID_SURFACE_HPP_

#include <numbers>
#include <utility>

#include "oloid/types.hpp"

namespace oloid {

// The developable surface is a single family of rulings: parameter m in
// [0, 1] runs along each ruling from the circle-1 arc (m = 0) to the
// circle-2 arc (m = 1), t in (-t_max, t_max) picks the ruling, and the sheet
// sign picks z >= 0 or z <= 0.  For the unit radius,
//   x = -1/2 + m / (cos t + 1) + (m - 1) cos t
//   y = (1 - m) sin t
//   z = +- m sqrt(2 cos t + 1) / (cos t + 1)
// scaled by r.  At |t| = t_max the two sheets meet along the ruling through
// the apex (3r/2, 0, 0).
inline constexpr double t_max = 2.0 * std::numbers::pi / 3.0;

enum class SheetSign {
  kUpper,  // z >= 0
  kLower,  // z <= 0
};

struct SurfacePoint {
  Vec3 position;
  Vec3 dp_dm;
  Vec3 dp_dt;
  Vec3 normal;  // dp_dm x dp_dt, sign fixed outward; unnormalized
  double m = 0.0;
  double t = 0.0;
  SheetSign sheet = SheetSign::kUpper;
};

// Point on the surface.  Requires m in [0, 1] and |t| <= t_max; the closed
// edge |t| = t_max is allowed here (the parametrization itself stays finite)
// but not in tangents/surface_normal.
Vec3 position(double m, double t, SheetSign sheet, const OloidSpec& spec);

// Partial derivatives (dp/dm, dp/dt).  Requires |t| < t_max strictly;
// |t| = t_max raises SingularityError because dp/dt blows up there.
std::pair<Vec3, Vec3> tangents(double m, double t, SheetSign sheet,
                               const OloidSpec& spec);

// Unnormalized outward normal dp/dm x dp/dt (sign fixed per sheet), with the
// singular cofactors cancelled analytically so it stays accurate near the
// edge.  Scales as r^2.  Requires |t| < t_max strictly.
Vec3 surface_normal(double m, double t, SheetSign sheet,
                    const OloidSpec& spec);

// Bundles position, tangents and normal for one parameter pair.
SurfacePoint surface_point(double m, double t, SheetSign sheet,
                           const OloidSpec& spec);

// |surface_normal| for the unit radius, computed cancellation-free:
//   |n| = ((2 - 3m) cos t + 1) / (cos(t/2) sqrt(2 cos t + 1)).
// The numerator is nonnegative on the whole domain, so the area element is
// linear in m.  Requires |t| < t_max.
double normal_magnitude(double m, double t);

// 2 cos t + 1, evaluated with full relative accuracy all the way to the
// zeros at |t| = t_max via the product identity
//   2 cos t + 1 = 4 sin(u/2) sin(t_max - u/2),  u = t_max - |t|.
// The direct expression loses every significant digit near the edge; u
// itself is exact by Sterbenz subtraction once |t| >= t_max/2.
double two_cos_plus_one(double t);

}  // namespace oloid

#endif  // OLOID_SURFACE_HPP_
