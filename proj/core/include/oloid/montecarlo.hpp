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

#ifndef OLOID_MONTECARLO_HPP_
#define OLOID_MONTECARLO_HPP_

#include <cstdint>
#include <vector>

#include "oloid/types.hpp"

namespace oloid {

struct McConfig {
  std::uint64_t samples = 1000000;  // accepted points for volume moments
  std::uint64_t seed = 0;
  int direction_grid = 4;  // icosphere subdivision level; 4 -> 2562 starts
  int refine_iters = 500;  // descent steps after the grid scan
};

enum class Classification {
  kInside,
  kBoundary,
  kOutside,
};

struct MembershipResult {
  Classification classification = Classification::kOutside;
  // min over unit directions n of h(n) - n.p: the smallest gap between p
  // and a supporting plane.  Positive inside, negative outside, and |margin|
  // is the distance to the nearest supporting plane of the witness.
  double margin = 0.0;
  Vec3 witness;  // minimizing direction
};

// Support function h(n) = max over the solid of n.p, from the two
// generating circles:
//   h(n) = max(n.c1 + r sqrt(nx^2 + ny^2), n.c2 + r sqrt(nx^2 + nz^2))
// with c1 = (-r/2, 0, 0), c2 = (r/2, 0, 0).  n need not be normalized;
// the result is positively homogeneous of degree 1 in n.
double support_function(const Vec3& n, const OloidSpec& spec);

// Membership by support-plane separation: scans cfg.direction_grid icosphere
// directions, then refines the best starts by pattern search on the sphere.
// Classifies kBoundary when |margin| <= tol.  Deterministic.
MembershipResult contains(const Vec3& p, const OloidSpec& spec,
                          const McConfig& cfg, double tol);
// Same with default config and tol = 1e-9 * radius.
MembershipResult contains(const Vec3& p, const OloidSpec& spec);

// Exact membership predicate: p is in the hull iff some ruling parameter
// lambda in [|z|/r, 1 - |y|/r] satisfies
//   sqrt((1-lambda)^2 - (y/r)^2) + sqrt(lambda^2 - (z/r)^2)
//     >= |x/r - (lambda - 1/2)|.
// The left side minus the right is concave in lambda, so the maximum is
// found by bisection on the derivative sign.  Used by the sampler; agrees
// with contains() away from the rounding-level boundary shell.
bool contains_exact(const Vec3& p, const OloidSpec& spec);

struct SampleBatch {
  std::vector<Vec3> points;     // exactly the requested count, all inside
  std::uint64_t attempts = 0;   // box draws consumed, accepted + rejected
};

// Rejection sampling from the tight box [-3r/2, 3r/2] x [-r, r] x [-r, r].
// Driven by a counter-based generator: attempt i derives from (seed, i)
// alone, so the stream is reproducible regardless of batching or threading.
SampleBatch sample_inside(std::uint64_t count, const OloidSpec& spec,
                          std::uint64_t seed);

// Volume, centroid and inertia from rejection sampling (the indicator-
// weighted box estimators), and area from a ruling-parametrized surface
// estimator with the edge singularity absorbed by substitution.  std_error
// is populated with one-standard-error estimates for every entry.
MassProperties mc_mass_properties(const OloidSpec& spec, const McConfig& cfg);

}  // namespace oloid

#endif  // OLOID_MONTECARLO_HPP_
