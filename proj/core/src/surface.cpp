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

#include "oloid/surface.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace oloid {

namespace {

void check_domain(double m, double t) {
  if (!(std::isfinite(m) && m >= 0.0 && m <= 1.0)) {
    throw std::domain_error("surface: m must be in [0, 1]");
  }
  if (!(std::isfinite(t) && std::abs(t) <= t_max)) {
    throw std::domain_error("surface: |t| must be <= 2*pi/3");
  }
}

void check_interior_t(double t) {
  if (std::abs(t) >= t_max) {
    throw SingularityError(
        "surface: derivative is singular on the edge |t| = 2*pi/3");
  }
}

double sheet_sign(SheetSign s) {
  return s == SheetSign::kUpper ? 1.0 : -1.0;
}

}  // namespace

double two_cos_plus_one(double t) {
  if (!(std::isfinite(t) && std::abs(t) <= t_max)) {
    throw std::domain_error("two_cos_plus_one: |t| must be <= 2*pi/3");
  }
  const double at = std::abs(t);
  if (at < 0.5 * t_max) {
    return 2.0 * std::cos(t) + 1.0;
  }
  const double u = t_max - at;
  return 4.0 * std::sin(0.5 * u) * std::sin(t_max - 0.5 * u);
}

Vec3 position(double m, double t, SheetSign sheet, const OloidSpec& spec) {
  spec.validate();
  check_domain(m, t);
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double cp1 = c + 1.0;
  const double sq = std::sqrt(two_cos_plus_one(t));
  const double x = -0.5 + m / cp1 + (m - 1.0) * c;
  const double y = (1.0 - m) * s;
  const double z = sheet_sign(sheet) * m * sq / cp1;
  return Vec3{x, y, z} * spec.radius;
}

std::pair<Vec3, Vec3> tangents(double m, double t, SheetSign sheet,
                               const OloidSpec& spec) {
  spec.validate();
  check_domain(m, t);
  check_interior_t(t);
  const double sgn = sheet_sign(sheet);
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double cp1 = c + 1.0;
  const double sq = std::sqrt(two_cos_plus_one(t));
  const Vec3 dm{1.0 / cp1 + c, -s, sgn * sq / cp1};
  const Vec3 dt{s * (m / (cp1 * cp1) - m + 1.0), (1.0 - m) * c,
                sgn * m * s * c / (sq * cp1 * cp1)};
  return {dm * spec.radius, dt * spec.radius};
}

Vec3 surface_normal(double m, double t, SheetSign sheet,
                    const OloidSpec& spec) {
  spec.validate();
  check_domain(m, t);
  check_interior_t(t);
  const double sgn = sheet_sign(sheet);
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double cp1 = c + 1.0;
  const double sq = std::sqrt(two_cos_plus_one(t));
  const double w = (2.0 - 3.0 * m) * c + 1.0;
  const double r2 = spec.radius * spec.radius;
  // dp_dm x dp_dt for the upper sheet, with the common 1/sq pole left in the
  // x and y cofactors (they cancel against the area weight only jointly);
  // the z cofactor is pole free.  Lower sheet mirrors z.
  return Vec3{c * ((3.0 * m - 2.0) * c - 1.0) / (cp1 * sq),
              s * w / (cp1 * sq), sgn * w / cp1} *
         r2;
}

SurfacePoint surface_point(double m, double t, SheetSign sheet,
                           const OloidSpec& spec) {
  SurfacePoint p;
  p.position = position(m, t, sheet, spec);
  std::tie(p.dp_dm, p.dp_dt) = tangents(m, t, sheet, spec);
  p.normal = surface_normal(m, t, sheet, spec);
  p.m = m;
  p.t = t;
  p.sheet = sheet;
  return p;
}

double normal_magnitude(double m, double t) {
  check_domain(m, t);
  check_interior_t(t);
  const double c = std::cos(t);
  const double w = (2.0 - 3.0 * m) * c + 1.0;
  const double sq = std::sqrt(two_cos_plus_one(t));
  // w >= 0 on the whole domain: for m <= 2/3 the minimum over t is 3m/2
  // (at the edge), for m >= 2/3 it is 3(1 - m) (at t = 0).
  return w / (std::cos(0.5 * t) * sq);
}

}  // namespace oloid
