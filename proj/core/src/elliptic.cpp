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

#include "oloid/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace oloid {

namespace {

void check_agm_args(double a, double b) {
  if (!(std::isfinite(a) && std::isfinite(b) && a > 0.0 && b > 0.0)) {
    throw std::domain_error("agm: arguments must be finite and > 0");
  }
}

}  // namespace

AgmResult agm_with_count(double a, double b) {
  check_agm_args(a, b);
  int n = 0;
  // Quadratic convergence: the iterate gap squares each step, so 8
  // iterations suffice even from ratio 1e6; the cap only guards NaN-free
  // non-convergence, which cannot happen for valid inputs.
  while (std::abs(a - b) > 4.0 * std::numeric_limits<double>::epsilon() * a &&
         n < 64) {
    const double am = 0.5 * (a + b);
    const double gm = std::sqrt(a * b);
    a = am;
    b = gm;
    ++n;
  }
  return {0.5 * (a + b), n};
}

double agm(double a, double b) { return agm_with_count(a, b).value; }

EllipticPair elliptic_pair(double parameter) {
  // K diverges at m = 1, so the pair is only defined on [0, 1); ellint_E
  // special-cases E(1) = 1 before calling here.
  const double m = parameter;
  if (!(std::isfinite(m) && m >= 0.0 && m < 1.0)) {
    throw std::domain_error("elliptic_pair: parameter must be in [0, 1)");
  }
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  // Running sum S = sum 2^{n-1} c_n^2.  The n = 0 term is m/2 because
  // c_0^2 = a_0^2 - b_0^2 = m.
  double sum = 0.5 * m;
  double pow2 = 1.0;
  int n = 0;
  while (std::abs(a - b) > 4.0 * std::numeric_limits<double>::epsilon() * a &&
         n < 64) {
    const double c = 0.5 * (a - b);
    sum += pow2 * c * c;
    pow2 *= 2.0;
    const double am = 0.5 * (a + b);
    const double gm = std::sqrt(a * b);
    a = am;
    b = gm;
    ++n;
  }
  const double K = std::numbers::pi / (a + b);
  return {K, K * (1.0 - sum)};
}

double ellint_K(double m) { return elliptic_pair(m).K; }

double ellint_E(double m) {
  if (m == 1.0) {
    return 1.0;
  }
  return elliptic_pair(m).E;
}

MassProperties closed_form_properties(const OloidSpec& spec) {
  spec.validate();
  const auto [K, E] = elliptic_pair(0.75);
  const double r = spec.radius;
  const double rho = spec.density;
  const double r2 = r * r;
  const double r3 = r2 * r;
  const double r5 = r3 * r2;

  MassProperties p;
  p.method = Method::kClosedForm;
  p.area = 4.0 * std::numbers::pi * r2;
  p.volume = (2.0 / 3.0 * K + 4.0 / 3.0 * E) * r3;
  p.center_of_mass = {0.0, 0.0, 0.0};
  p.inertia.xx = (32.0 / 45.0 * E - 2.0 / 45.0 * K) * rho * r5;
  p.inertia.yy = (71.0 / 45.0 * E - 19.0 / 90.0 * K) * rho * r5;
  p.inertia.zz = p.inertia.yy;
  p.inertia.xy = 0.0;
  p.inertia.xz = 0.0;
  p.inertia.yz = 0.0;
  return p;
}

}  // namespace oloid
