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

#ifndef OLOID_QUADRATURE_HPP_
#define OLOID_QUADRATURE_HPP_

#include <functional>
#include <string>
#include <vector>

#include "oloid/types.hpp"

namespace oloid {

struct GlNode {
  double node = 0.0;    // in [0, 1]
  double weight = 0.0;  // weights sum to 1
};

// Gauss-Legendre rule with n points, mapped to [0, 1].  Exact for
// polynomials of degree <= 2n - 1.  Nodes are returned in ascending order.
std::vector<GlNode> gauss_legendre(int n);

struct DeResult {
  double value = 0.0;
  int levels_used = 0;     // refinement levels actually evaluated
  double last_delta = 0.0;  // |I_L - I_{L-1}| relative to |I_L|
  bool converged = false;
};

// Tanh-sinh (double exponential) quadrature of f over the open interval
// (a, b).  f is never evaluated at a or b, so integrable endpoint
// singularities are allowed; a non-finite value at an interior node raises
// EvaluationError.  Abscissas near the endpoints are quantized at the
// endpoints' own rounding granularity, which caps the achievable accuracy
// for endpoint-singular integrands around 1e-7 relative; smooth integrands
// converge to full precision.  Levels are halvings of the step, at most
// `levels`; the run stops early once successive levels agree to `tol`
// relative.
DeResult de_integrate(const std::function<double(double)>& f, double a,
                      double b, int levels, double tol);

struct QuadratureConfig {
  int m_nodes = 5;      // Gauss-Legendre points along the rulings
  int t_levels = 10;    // max tanh-sinh refinement levels across rulings
  double t_tolerance = 1e-12;
};

// Vector field whose divergence is the quantity to integrate over the solid.
struct FluxField {
  std::function<Vec3(const Vec3&)> evaluator;
  std::string name;
};

// Flux of the field through the closed surface, i.e. the volume integral of
// its divergence.  The ruling direction is handled by Gauss-Legendre (the
// integrand is polynomial in m of degree <= 4 for every field used here),
// the arc direction by tanh-sinh folded about the singular edge so the
// 1/sqrt(2 cos t + 1) factor is resolved to full precision.  Both sheets and
// both signs of t are summed explicitly.
double flux_integral(const FluxField& field, const OloidSpec& spec,
                     const QuadratureConfig& cfg);

// Surface area by direct integration of |dp_dm x dp_dt|.
double surface_area(const OloidSpec& spec, const QuadratureConfig& cfg);

// All mass properties by the divergence theorem: one flux integral per
// moment (volume, first moments, second moments, products), plus the direct
// area integral.  Deterministic: fixed evaluation order, compensated sums.
MassProperties quadrature_mass_properties(const OloidSpec& spec,
                                          const QuadratureConfig& cfg);

// One-dimensional reduced integrands for the two distinct diagonal inertia
// entries of the unit-radius, unit-density solid: the ruling direction has
// been integrated out in closed form, leaving a single integral over
// t in (-t_max, t_max) that covers both sheets.  Integrating
// reduced_integrand_Ixx gives I_xx, and reduced_integrand_Iyy gives
// I_yy = I_zz.
double reduced_integrand_Ixx(double t);
double reduced_integrand_Iyy(double t);

// The reduced integrals themselves, evaluated with the same folded
// tanh-sinh scheme as the flux route and scaled to the given solid.  These
// share no algebra with quadrature_mass_properties beyond the quadrature
// machinery, so agreement between the two is a strong cross-check.
double reduced_route_Ixx(const OloidSpec& spec, const QuadratureConfig& cfg);
double reduced_route_Iyy(const OloidSpec& spec, const QuadratureConfig& cfg);

}  // namespace oloid

#endif  // OLOID_QUADRATURE_HPP_
