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

#ifndef OLOID_ELLIPTIC_HPP_
#define OLOID_ELLIPTIC_HPP_

#include "oloid/types.hpp"

namespace oloid {

struct AgmResult {
  double value = 0.0;
  int iterations = 0;
};

// Arithmetic-geometric mean of a, b (both must be finite and > 0).
// Converges quadratically; for inputs with ratio in [1e-6, 1e6] it needs at
// most 8 iterations to reach full double precision.
double agm(double a, double b);
AgmResult agm_with_count(double a, double b);

// Complete elliptic integrals in the PARAMETER convention:
//   K(m) = Integral_0^{pi/2} (1 - m sin^2 p)^{-1/2} dp,  m in [0, 1)
//   E(m) = Integral_0^{pi/2} (1 - m sin^2 p)^{+1/2} dp,  m in [0, 1]
// (m is the square of the modulus k).
double ellint_K(double m);
double ellint_E(double m);

// Both integrals from a single AGM pass:
//   K = pi / (2 agm(1, sqrt(1-m)))
//   E = K (1 - sum_{n>=0} 2^{n-1} c_n^2),  c_0^2 = m,  c_n = (a_n - b_n)/2.
struct EllipticPair {
  double K = 0.0;
  double E = 0.0;
};
EllipticPair elliptic_pair(double parameter);

// Exact mass properties.  All four integral routes in this library reproduce
// these values; everything reduces to K(3/4) and E(3/4):
//   area   = 4 pi r^2
//   volume = (2/3 K + 4/3 E) r^3
//   I_xx   = (32/45 E -  2/45 K) rho r^5
//   I_yy   = I_zz = (71/45 E - 19/90 K) rho r^5
// The centroid sits at the origin and the inertia tensor is diagonal in the
// body frame, with the degeneracy I_yy = I_zz forced by the symmetry that
// swaps the two generating circles.
MassProperties closed_form_properties(const OloidSpec& spec);

}  // namespace oloid

#endif  // OLOID_ELLIPTIC_HPP_
