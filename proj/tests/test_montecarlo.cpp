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

#include "oloid/montecarlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "oloid/elliptic.hpp"
#include "oloid/surface.hpp"
#include "oracles.hpp"

namespace oloid {
namespace {

const OloidSpec kUnit{};

double support_gap(const Vec3& n, const Vec3& p) {
  return support_function(n, kUnit) - dot(n, p);
}

TEST(SupportFunction, AxisValues) {
  // Along +-x the farthest points are the circle apexes at distance 3r/2;
  // along y or z one circle contributes r and the other only its center.
  EXPECT_DOUBLE_EQ(support_function(Vec3{1, 0, 0}, kUnit), 1.5);
  EXPECT_DOUBLE_EQ(support_function(Vec3{-1, 0, 0}, kUnit), 1.5);
  EXPECT_DOUBLE_EQ(support_function(Vec3{0, 1, 0}, kUnit), 1.0);
  EXPECT_DOUBLE_EQ(support_function(Vec3{0, -1, 0}, kUnit), 1.0);
  EXPECT_DOUBLE_EQ(support_function(Vec3{0, 0, 1}, kUnit), 1.0);

  OloidSpec big;
  big.radius = 2.0;
  EXPECT_DOUBLE_EQ(support_function(Vec3{1, 0, 0}, big), 3.0);
}

TEST(SupportFunction, PositiveHomogeneityOfDegreeOne) {
  const Vec3 n{0.3, -0.5, 0.8};
  EXPECT_NEAR(support_function(n * 4.0, kUnit),
              4.0 * support_function(n, kUnit), 1e-14);
}

TEST(SupportFunction, DominatesAllSurfacePoints) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> um(0.0, 1.0);
  std::uniform_real_distribution<double> ut(-t_max, t_max);
  std::uniform_real_distribution<double> ucoord(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Vec3 n =
        normalized(Vec3{ucoord(rng), ucoord(rng), ucoord(rng) + 1e-3});
    const double h = support_function(n, kUnit);
    for (int j = 0; j < 20; ++j) {
      const Vec3 p = position(um(rng), ut(rng) * 0.9999,
                              j % 2 ? SheetSign::kUpper : SheetSign::kLower,
                              kUnit);
      EXPECT_GE(h, dot(n, p) - 1e-12);
    }
  }
}

TEST(SupportFunction, RejectsDegenerateDirections) {
  EXPECT_THROW(support_function(Vec3{0, 0, 0}, kUnit), std::domain_error);
  EXPECT_THROW(support_function(Vec3{std::nan(""), 0, 1}, kUnit),
               std::domain_error);
}

TEST(Contains, OriginMargin) {
  // The minimal support gap at the origin is sqrt(2)/2, attained at
  // n = (0, +-1/sqrt2, +-1/sqrt2); brute force over direction grids agrees.
  const MembershipResult res = contains(Vec3{0, 0, 0}, kUnit);
  EXPECT_EQ(res.classification, Classification::kInside);
  EXPECT_NEAR(res.margin, std::sqrt(0.5), 1e-9);
  EXPECT_NEAR(std::abs(res.witness.y), std::sqrt(0.5), 1e-4);
  EXPECT_NEAR(std::abs(res.witness.z), std::sqrt(0.5), 1e-4);

  const double brute = oloid_test::brute_force_margin(support_gap,
                                                      Vec3{0, 0, 0});
  EXPECT_NEAR(brute, res.margin, 1e-4);
}

TEST(Contains, ApexIsBoundary) {
  const MembershipResult res = contains(Vec3{1.5, 0, 0}, kUnit);
  EXPECT_EQ(res.classification, Classification::kBoundary);
  EXPECT_NEAR(res.margin, 0.0, 1e-9);
}

TEST(Contains, FarPointMarginIsMinusDistance) {
  const MembershipResult res = contains(Vec3{10, 0, 0}, kUnit);
  EXPECT_EQ(res.classification, Classification::kOutside);
  EXPECT_NEAR(res.margin, -8.5, 1e-9);
}

TEST(Contains, OutsideMarginMatchesCircleDistanceOracle) {
  // For points whose nearest hull feature is a circle arc, the (negated)
  // margin equals the distance to that circle.
  for (const Vec3 p : {Vec3{0, 0, 3}, Vec3{0, -2.5, 0}, Vec3{-2, 1.5, 0}}) {
    const MembershipResult res = contains(p, kUnit);
    const double dist = oloid_test::distance_to_circles(p, 1.0);
    EXPECT_EQ(res.classification, Classification::kOutside);
    EXPECT_NEAR(res.margin, -dist, 1e-9) << "p=(" << p.x << "," << p.y << ","
                                         << p.z << ")";
  }
}

TEST(Contains, SurfaceDistanceOracleAgreesAtAssortedPoints) {
  // |margin| is the distance to the boundary; the oracle computes that
  // distance in parameter space, nowhere near the direction-space descent.
  for (const Vec3 p : {Vec3{0.3, 0.2, -0.1}, Vec3{-0.8, 0.1, 0.2},
                       Vec3{1.0, 0.5, 0.5}, Vec3{0.2, -1.3, 0.7}}) {
    const MembershipResult res = contains(p, kUnit);
    const double dist = oloid_test::surface_distance(p);
    const double sign =
        res.classification == Classification::kInside ? 1.0 : -1.0;
    EXPECT_NEAR(res.margin, sign * dist, 1e-9)
        << "p=(" << p.x << "," << p.y << "," << p.z << ")";
  }
}

TEST(Contains, ToleranceControlsBoundaryBand) {
  const Vec3 p = position(0.5, 0.4, SheetSign::kUpper, kUnit);
  const Vec3 nudged = p * (1.0 + 1e-8);
  EXPECT_EQ(contains(nudged, kUnit, McConfig{}, 1e-6).classification,
            Classification::kBoundary);
  EXPECT_EQ(contains(nudged, kUnit, McConfig{}, 1e-12).classification,
            Classification::kOutside);
}

TEST(Contains, WitnessIsUnitAndRealizesMargin) {
  for (const Vec3 p : {Vec3{0, 0, 0}, Vec3{0.5, 0.3, -0.2}, Vec3{3, 1, 1}}) {
    const MembershipResult res = contains(p, kUnit);
    EXPECT_NEAR(norm(res.witness), 1.0, 1e-12);
    EXPECT_NEAR(support_gap(res.witness, p), res.margin, 1e-12);
  }
}

TEST(Contains, ConfigValidation) {
  McConfig bad;
  bad.direction_grid = 9;
  EXPECT_THROW(contains(Vec3{0, 0, 0}, kUnit, bad, 1e-9), std::domain_error);
  bad = McConfig{};
  bad.refine_iters = -1;
  EXPECT_THROW(contains(Vec3{0, 0, 0}, kUnit, bad, 1e-9), std::domain_error);
  EXPECT_THROW(contains(Vec3{0, 0, 0}, kUnit, McConfig{}, -1.0),
               std::domain_error);
}

TEST(ContainsExact, AgreesWithSupportClassification) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ux(-1.6, 1.6);
  std::uniform_real_distribution<double> uyz(-1.1, 1.1);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const Vec3 p{ux(rng), uyz(rng), uyz(rng)};
    const MembershipResult res = contains(p, kUnit);
    if (res.classification == Classification::kBoundary) {
      continue;  // random points essentially never land on the boundary
    }
    ++checked;
    EXPECT_EQ(contains_exact(p, kUnit),
              res.classification == Classification::kInside)
        << "p=(" << p.x << "," << p.y << "," << p.z << ")";
  }
  EXPECT_GT(checked, 350);
}

TEST(ContainsExact, HullSymmetries) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> ux(-1.6, 1.6);
  std::uniform_real_distribution<double> uyz(-1.1, 1.1);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 p{ux(rng), uyz(rng), uyz(rng)};
    const bool base = contains_exact(p, kUnit);
    EXPECT_EQ(contains_exact(Vec3{p.x, -p.y, p.z}, kUnit), base);
    EXPECT_EQ(contains_exact(Vec3{p.x, p.y, -p.z}, kUnit), base);
    EXPECT_EQ(contains_exact(Vec3{-p.x, p.z, p.y}, kUnit), base);
  }
}

TEST(SampleInside, DeterministicAndInside) {
  const SampleBatch a = sample_inside(2000, kUnit, 42);
  const SampleBatch b = sample_inside(2000, kUnit, 42);
  ASSERT_EQ(a.points.size(), 2000u);
  EXPECT_EQ(a.attempts, b.attempts);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].x, b.points[i].x);
    EXPECT_EQ(a.points[i].y, b.points[i].y);
    EXPECT_EQ(a.points[i].z, b.points[i].z);
  }
  for (const Vec3& p : a.points) {
    EXPECT_TRUE(contains_exact(p, kUnit));
    EXPECT_GE(p.x, -1.5);
    EXPECT_LE(p.x, 1.5);
    EXPECT_GE(p.y, -1.0);
    EXPECT_LE(p.y, 1.0);
    EXPECT_GE(p.z, -1.0);
    EXPECT_LE(p.z, 1.0);
  }

  const SampleBatch c = sample_inside(2000, kUnit, 43);
  bool any_diff = false;
  for (std::size_t i = 0; i < c.points.size() && !any_diff; ++i) {
    any_diff = c.points[i].x != a.points[i].x;
  }
  EXPECT_TRUE(any_diff);
}

TEST(SampleInside, SubsetClassifiesInsideUnderContains) {
  const SampleBatch batch = sample_inside(200, kUnit, 7);
  for (const Vec3& p : batch.points) {
    const MembershipResult res = contains(p, kUnit, McConfig{}, 1e-9);
    EXPECT_NE(res.classification, Classification::kOutside);
  }
}

TEST(SampleInside, AcceptanceRatioNearVolumeFraction) {
  const SampleBatch batch = sample_inside(100000, kUnit, 0);
  const double p_ref = closed_form_properties(kUnit).volume / 12.0;
  const double ratio =
      static_cast<double>(batch.points.size()) / batch.attempts;
  const double sigma = std::sqrt(p_ref * (1.0 - p_ref) / batch.attempts);
  EXPECT_NEAR(ratio, p_ref, 4.0 * sigma);
}

TEST(McMassProperties, SeedDeterminism) {
  McConfig cfg;
  cfg.samples = 50000;
  const MassProperties a = mc_mass_properties(kUnit, cfg);
  const MassProperties b = mc_mass_properties(kUnit, cfg);
  EXPECT_EQ(a.volume, b.volume);
  EXPECT_EQ(a.area, b.area);
  EXPECT_EQ(a.inertia.xx, b.inertia.xx);
  EXPECT_EQ(a.std_error->volume, b.std_error->volume);

  cfg.seed = 1;
  const MassProperties c = mc_mass_properties(kUnit, cfg);
  EXPECT_NE(a.volume, c.volume);
}

TEST(McMassProperties, WithinStandardErrorsOfClosedForm) {
  McConfig cfg;
  cfg.samples = 200000;
  const MassProperties mc = mc_mass_properties(kUnit, cfg);
  const MassProperties cf = closed_form_properties(kUnit);
  ASSERT_TRUE(mc.std_error.has_value());
  EXPECT_NEAR(mc.volume, cf.volume, 4.0 * mc.std_error->volume);
  EXPECT_NEAR(mc.area, cf.area, 4.0 * mc.std_error->area);
  EXPECT_NEAR(mc.inertia.xx, cf.inertia.xx, 4.0 * mc.std_error->inertia.xx);
  EXPECT_NEAR(mc.inertia.yy, cf.inertia.yy, 4.0 * mc.std_error->inertia.yy);
  EXPECT_NEAR(mc.inertia.zz, cf.inertia.zz, 4.0 * mc.std_error->inertia.zz);
  EXPECT_NEAR(mc.inertia.xy, 0.0, 4.0 * mc.std_error->inertia.xy);
  EXPECT_NEAR(norm(mc.center_of_mass), 0.0,
              4.0 * norm(mc.std_error->center_of_mass) + 1e-12);
  EXPECT_EQ(mc.method, Method::kMonteCarlo);
}

TEST(McMassProperties, StandardErrorShrinksWithSamples) {
  McConfig small;
  small.samples = 20000;
  McConfig large;
  large.samples = 200000;
  const MassProperties a = mc_mass_properties(kUnit, small);
  const MassProperties b = mc_mass_properties(kUnit, large);
  EXPECT_GT(a.std_error->volume, b.std_error->volume);
  EXPECT_GT(a.std_error->inertia.xx, b.std_error->inertia.xx);
}

TEST(McMassProperties, ExactScalingWithPowerOfTwoFactors) {
  // Same seed means the identical unit-box sample stream; power-of-two
  // density and radius factors scale every estimator bitwise, independent
  // of how the implementation associates its multiplications.
  McConfig cfg;
  cfg.samples = 30000;
  const MassProperties unit = mc_mass_properties(kUnit, cfg);
  OloidSpec scaled;
  scaled.radius = 2.0;
  scaled.density = 4.0;
  const MassProperties s = mc_mass_properties(scaled, cfg);
  EXPECT_EQ(s.volume, 8.0 * unit.volume);
  EXPECT_EQ(s.area, 4.0 * unit.area);
  EXPECT_EQ(s.inertia.xx, 128.0 * unit.inertia.xx);
  EXPECT_EQ(s.inertia.yy, 128.0 * unit.inertia.yy);
}

TEST(McMassProperties, RejectsDegenerateSampleCounts) {
  McConfig cfg;
  cfg.samples = 1;
  EXPECT_THROW(mc_mass_properties(kUnit, cfg), std::domain_error);
  cfg.samples = 0;
  EXPECT_THROW(mc_mass_properties(kUnit, cfg), std::domain_error);
}

}  // namespace
}  // namespace oloid
