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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "oloid/surface.hpp"

namespace oloid {

namespace {

// Counter-based generator: splitmix64 finalizer over (seed, counter).  Every
// attempt index maps to the same draws no matter how the work is batched.
std::uint64_t mix_u64(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + counter * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double to_unit_double(std::uint64_t v) {
  return static_cast<double>(v >> 11) * 0x1.0p-53;
}

// Seed salt separating the surface-area stream from the volume stream.
constexpr std::uint64_t kAreaStreamSalt = 0xA24BAED4963EE407ull;

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double total() const { return sum + comp; }
};

// Membership for the unit-radius solid.  The hull is the union of segments
// from C1 (in z = 0) to C2 (in y = 0); eliminating the endpoints leaves a
// one-dimensional feasibility test: p is inside iff
//   G(l) = sqrt((1-l)^2 - y^2) + sqrt(l^2 - z^2) - |x - (l - 1/2)| >= 0
// for some l in [|z|, 1 - |y|].  G is concave there, so the maximum is
// pinned down by bisection on the derivative sign; concavity also yields an
// upper bound G(mid) + |G'(mid)| (hi - lo) that lets far-outside points
// reject after a few steps.
bool unit_contains_exact(double x, double y, double z) {
  const double ay = std::abs(y);
  const double az = std::abs(z);
  double lo = az;
  double hi = 1.0 - ay;
  if (lo > hi) {
    return false;
  }
  const auto radicals = [&](double l, double* s1, double* s2) {
    const double r1 = (1.0 - l) * (1.0 - l) - y * y;
    const double r2 = l * l - z * z;
    *s1 = std::sqrt(std::max(0.0, r1));
    *s2 = std::sqrt(std::max(0.0, r2));
  };
  const auto g_of = [&](double l, double s1, double s2) {
    return s1 + s2 - std::abs(x - (l - 0.5));
  };

  double s1 = 0.0;
  double s2 = 0.0;
  radicals(lo, &s1, &s2);
  if (g_of(lo, s1, s2) >= 0.0) {
    return true;
  }
  radicals(hi, &s1, &s2);
  if (g_of(hi, s1, s2) >= 0.0) {
    return true;
  }

  for (int iter = 0; iter < 64 && hi - lo > 1e-14; ++iter) {
    const double mid = 0.5 * (lo + hi);
    radicals(mid, &s1, &s2);
    const double g = g_of(mid, s1, s2);
    if (g >= 0.0) {
      return true;
    }
    double dg;
    if (s2 == 0.0) {
      dg = 1.0;
    } else if (s1 == 0.0) {
      dg = -1.0;
    } else {
      const double c = x - (mid - 0.5);
      dg = -(1.0 - mid) / s1 + mid / s2 + (c > 0.0 ? 1.0 : -1.0);
      if (g + std::abs(dg) * (hi - lo) < 0.0) {
        return false;
      }
    }
    if (dg > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return false;
}

const std::vector<Vec3>& icosphere_directions(int level) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const std::vector<Vec3>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(level);
  if (it != cache.end()) {
    return *it->second;
  }

  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  std::vector<Vec3> verts = {
      {-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1},
  };
  for (Vec3& v : verts) {
    v = normalized(v);
  }
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
  };
  for (int pass = 0; pass < level; ++pass) {
    std::map<std::pair<int, int>, int> midpoint;
    const auto mid_of = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto mit = midpoint.find(key);
      if (mit != midpoint.end()) {
        return mit->second;
      }
      const int idx = static_cast<int>(verts.size());
      verts.push_back(normalized(verts[a] + verts[b]));
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = mid_of(f[0], f[1]);
      const int bc = mid_of(f[1], f[2]);
      const int ca = mid_of(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  auto owned = std::make_unique<const std::vector<Vec3>>(std::move(verts));
  const std::vector<Vec3>& ref = *owned;
  cache.emplace(level, std::move(owned));
  return ref;
}

void check_mc_config(const McConfig& cfg) {
  if (cfg.direction_grid < 0 || cfg.direction_grid > 8) {
    throw std::domain_error("McConfig: direction_grid must be in [0, 8]");
  }
  if (cfg.refine_iters < 0 || cfg.refine_iters > 100000) {
    throw std::domain_error("McConfig: refine_iters out of range");
  }
}

}  // namespace

double support_function(const Vec3& n, const OloidSpec& spec) {
  spec.validate();
  if (!(std::isfinite(n.x) && std::isfinite(n.y) && std::isfinite(n.z)) ||
      (n.x == 0.0 && n.y == 0.0 && n.z == 0.0)) {
    throw std::domain_error(
        "support_function: direction must be finite and nonzero");
  }
  const double r = spec.radius;
  const double h1 =
      -0.5 * r * n.x + r * std::sqrt(n.x * n.x + n.y * n.y);
  const double h2 = 0.5 * r * n.x + r * std::sqrt(n.x * n.x + n.z * n.z);
  return std::max(h1, h2);
}

MembershipResult contains(const Vec3& p, const OloidSpec& spec,
                          const McConfig& cfg, double tol) {
  spec.validate();
  check_mc_config(cfg);
  if (!(std::isfinite(tol) && tol >= 0.0)) {
    throw std::domain_error("contains: tol must be finite and >= 0");
  }
  const std::vector<Vec3>& dirs = icosphere_directions(cfg.direction_grid);

  const auto margin_of = [&](const Vec3& n) {
    return support_function(n, spec) - dot(n, p);
  };

  // Best few grid starts, then pattern search on the sphere from each.
  constexpr int kStarts = 4;
  std::array<int, kStarts> best_idx{};
  std::array<double, kStarts> best_val{};
  best_val.fill(std::numeric_limits<double>::infinity());
  for (int i = 0; i < static_cast<int>(dirs.size()); ++i) {
    const double v = margin_of(dirs[i]);
    for (int s = 0; s < kStarts; ++s) {
      if (v < best_val[s]) {
        for (int q = kStarts - 1; q > s; --q) {
          best_val[q] = best_val[q - 1];
          best_idx[q] = best_idx[q - 1];
        }
        best_val[s] = v;
        best_idx[s] = i;
        break;
      }
    }
  }

  // Projected descent on phi = max(g1, g2), where g_i is the supporting
  // gap against one generating circle.  Planes that touch a ruling support
  // both circles at once, so for surface contacts the minimizer sits on the
  // ridge g1 = g2; a plain compass search crawls along that crease, while a
  // Newton step back onto the ridge plus descent along its tangent
  // converges to full precision within the iteration budget.  Off-ridge
  // (single-circle contact) the step is ordinary projected gradient.
  const double r = spec.radius;
  const Vec3 c1{-0.5 * r, 0.0, 0.0};
  const Vec3 c2{0.5 * r, 0.0, 0.0};
  const auto branch_gaps = [&](const Vec3& n, double* g1, double* g2) {
    *g1 = dot(n, c1 - p) + r * std::hypot(n.x, n.y);
    *g2 = dot(n, c2 - p) + r * std::hypot(n.x, n.z);
  };
  const auto branch_grad = [&](const Vec3& n, bool first) {
    if (first) {
      const double rho = std::max(std::hypot(n.x, n.y), 1e-300);
      return (c1 - p) + Vec3{n.x, n.y, 0.0} * (r / rho);
    }
    const double rho = std::max(std::hypot(n.x, n.z), 1e-300);
    return (c2 - p) + Vec3{n.x, 0.0, n.z} * (r / rho);
  };
  const auto tangential = [](const Vec3& n, const Vec3& v) {
    return v - n * dot(n, v);
  };

  // Descent starts: the best grid directions plus structural candidates.
  // When the nearest feature is a circle arc the normal cone at the contact
  // is a fan bisected by the in-plane radial direction, so radials (and the
  // disk separating directions, exact for single-circle contact) let the
  // arc cases converge as fast as the ruling cases.
  std::array<Vec3, kStarts + 4> starts{};
  int n_starts = 0;
  for (int s = 0; s < kStarts && s < static_cast<int>(dirs.size()); ++s) {
    starts[n_starts++] = dirs[best_idx[s]];
  }
  const auto add_start = [&](const Vec3& v) {
    const double len = norm(v);
    if (len > 1e-12 * r) {
      starts[n_starts++] = v / len;
    }
  };
  add_start(Vec3{p.x - c1.x, p.y, 0.0});
  add_start(Vec3{p.x - c2.x, 0.0, p.z});
  {
    const double rho1 = std::hypot(p.x - c1.x, p.y);
    const double s1 = std::min(rho1, r) / std::max(rho1, 1e-300);
    add_start(p - (c1 + Vec3{(p.x - c1.x) * s1, p.y * s1, 0.0}));
    const double rho2 = std::hypot(p.x - c2.x, p.z);
    const double s2 = std::min(rho2, r) / std::max(rho2, 1e-300);
    add_start(p - (c2 + Vec3{(p.x - c2.x) * s2, 0.0, p.z * s2}));
  }

  const double edge_angle = 1.1071487177940904 /
                            static_cast<double>(1 << cfg.direction_grid);
  MembershipResult result;
  result.margin = std::numeric_limits<double>::infinity();
  for (int s = 0; s < n_starts; ++s) {
    Vec3 n = starts[s];
    double val = margin_of(n);
    double step = edge_angle;
    for (int iter = 0; iter < cfg.refine_iters; ++iter) {
      double g1 = 0.0;
      double g2 = 0.0;
      branch_gaps(n, &g1, &g2);
      const double delta = g1 - g2;
      const Vec3 pg1 = tangential(n, branch_grad(n, true));
      const Vec3 pg2 = tangential(n, branch_grad(n, false));
      const Vec3 v = pg1 - pg2;
      const double vv = dot(v, v);

      Vec3 cand[3];
      int n_cand = 0;
      if (std::abs(delta) <= std::sqrt(vv) * step && vv > 0.0) {
        const Vec3 to_ridge = v * (-delta / vv);
        Vec3 tau = cross(n, v);
        const double tau_len = norm(tau);
        if (tau_len > 0.0) {
          tau = tau / tau_len;
          const double slope = 0.5 * dot(pg1 + pg2, tau);
          const Vec3 along = tau * (slope > 0.0 ? -step : step);
          cand[n_cand++] = normalized(n + along + to_ridge);
          cand[n_cand++] = normalized(n + along * 0.5 + to_ridge);
        }
        cand[n_cand++] = normalized(n + to_ridge);
      } else {
        const Vec3 g = delta > 0.0 ? pg1 : pg2;
        const double glen = norm(g);
        if (glen > 0.0) {
          cand[n_cand++] = normalized(n - g * (step / glen));
          cand[n_cand++] = normalized(n - g * (0.5 * step / glen));
        }
      }

      bool moved = false;
      for (int k = 0; k < n_cand; ++k) {
        const double cv = margin_of(cand[k]);
        if (cv < val) {
          val = cv;
          n = cand[k];
          moved = true;
        }
      }
      step *= moved ? 1.5 : 0.5;
      step = std::min(step, edge_angle);
      if (step < 1e-12) {
        break;
      }
    }
    if (val < result.margin) {
      result.margin = val;
      result.witness = n;
    }
  }

  if (result.margin > tol) {
    result.classification = Classification::kInside;
  } else if (result.margin < -tol) {
    result.classification = Classification::kOutside;
  } else {
    result.classification = Classification::kBoundary;
  }
  return result;
}

MembershipResult contains(const Vec3& p, const OloidSpec& spec) {
  return contains(p, spec, McConfig{}, 1e-9 * spec.radius);
}

bool contains_exact(const Vec3& p, const OloidSpec& spec) {
  spec.validate();
  const double inv_r = 1.0 / spec.radius;
  return unit_contains_exact(p.x * inv_r, p.y * inv_r, p.z * inv_r);
}

SampleBatch sample_inside(std::uint64_t count, const OloidSpec& spec,
                          std::uint64_t seed) {
  spec.validate();
  SampleBatch batch;
  batch.points.reserve(count);
  if (count == 0) {
    return batch;
  }
  const double r = spec.radius;
  for (std::uint64_t i = 0;; ++i) {
    const double x =
        -1.5 + 3.0 * to_unit_double(mix_u64(seed, 4 * i));
    const double y =
        -1.0 + 2.0 * to_unit_double(mix_u64(seed, 4 * i + 1));
    const double z =
        -1.0 + 2.0 * to_unit_double(mix_u64(seed, 4 * i + 2));
    if (unit_contains_exact(x, y, z)) {
      batch.points.push_back(Vec3{x, y, z} * r);
      if (batch.points.size() == count) {
        batch.attempts = i + 1;
        break;
      }
    }
  }
  return batch;
}

MassProperties mc_mass_properties(const OloidSpec& spec,
                                  const McConfig& cfg) {
  spec.validate();
  check_mc_config(cfg);
  if (cfg.samples < 2) {
    throw std::domain_error("mc_mass_properties: samples must be >= 2");
  }

  // Indicator-weighted box estimators in unit-radius coordinates; one
  // accumulator pair (sum, sum of squares) per integrand.
  constexpr int kQty = 10;
  std::array<Neumaier, kQty> acc;
  std::array<Neumaier, kQty> acc_sq;
  std::uint64_t accepted = 0;
  std::uint64_t attempts = 0;
  for (std::uint64_t i = 0; accepted < cfg.samples; ++i) {
    const double x =
        -1.5 + 3.0 * to_unit_double(mix_u64(cfg.seed, 4 * i));
    const double y =
        -1.0 + 2.0 * to_unit_double(mix_u64(cfg.seed, 4 * i + 1));
    const double z =
        -1.0 + 2.0 * to_unit_double(mix_u64(cfg.seed, 4 * i + 2));
    attempts = i + 1;
    if (!unit_contains_exact(x, y, z)) {
      continue;
    }
    ++accepted;
    const std::array<double, kQty> vals = {
        1.0,
        x,
        y,
        z,
        y * y + z * z,
        x * x + z * z,
        x * x + y * y,
        x * y,
        x * z,
        y * z,
    };
    for (int q = 0; q < kQty; ++q) {
      acc[q].add(vals[q]);
      acc_sq[q].add(vals[q] * vals[q]);
    }
  }

  const double n = static_cast<double>(attempts);
  std::array<double, kQty> mean;
  std::array<double, kQty> sem;
  for (int q = 0; q < kQty; ++q) {
    mean[q] = acc[q].total() / n;
    const double var =
        std::max(0.0, acc_sq[q].total() / n - mean[q] * mean[q]);
    sem[q] = std::sqrt(var / n);
  }

  const double r = spec.radius;
  const double rho = spec.density;
  const double r3 = r * r * r;
  const double r5 = r3 * r * r;
  const double box = 12.0;  // unit-radius bounding box volume
  const double vol_u = box * mean[0];

  MassProperties props;
  props.method = Method::kMonteCarlo;
  MassPropertyErrors err;

  props.volume = vol_u * r3;
  err.volume = box * sem[0] * r3;
  props.center_of_mass = Vec3{mean[1], mean[2], mean[3]} * (box / vol_u * r);
  err.center_of_mass = Vec3{sem[1], sem[2], sem[3]} * (box / vol_u * r);
  props.inertia.xx = rho * box * mean[4] * r5;
  props.inertia.yy = rho * box * mean[5] * r5;
  props.inertia.zz = rho * box * mean[6] * r5;
  props.inertia.xy = -rho * box * mean[7] * r5;
  props.inertia.xz = -rho * box * mean[8] * r5;
  props.inertia.yz = -rho * box * mean[9] * r5;
  err.inertia.xx = rho * box * sem[4] * r5;
  err.inertia.yy = rho * box * sem[5] * r5;
  err.inertia.zz = rho * box * sem[6] * r5;
  err.inertia.xy = rho * box * sem[7] * r5;
  err.inertia.xz = rho * box * sem[8] * r5;
  err.inertia.yz = rho * box * sem[9] * r5;

  // Surface area from its own stream: uniform (theta, m) with t = t_max
  // sin(theta), whose Jacobian cancels the edge singularity of the area
  // element, leaving a bounded integrand with finite variance.
  Neumaier aq;
  Neumaier aq_sq;
  const std::uint64_t area_seed = cfg.seed ^ kAreaStreamSalt;
  const double sin_tmax = std::sin(t_max);
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    const double u0 = to_unit_double(mix_u64(area_seed, 4 * i));
    const double m = to_unit_double(mix_u64(area_seed, 4 * i + 1));
    const double theta = (u0 - 0.5) * std::numbers::pi;
    // a = pi/4 - |theta|/2, so 1 - |sin theta| = 2 sin^2 a exactly.
    const double a = 0.25 * std::numbers::pi - 0.5 * std::abs(theta);
    const double sa = std::sin(a);
    const double ca = std::cos(a);
    const double t = t_max * std::sin(theta);
    const double w = (2.0 - 3.0 * m) * std::cos(t) + 1.0;
    const double ch = std::cos(0.5 * t);
    const double hu = t_max * sa * sa;  // half the edge distance
    double ratio;
    if (sa == 0.0) {
      ratio = 1.0 / std::sqrt(t_max * sin_tmax);
    } else {
      ratio = sa * ca / std::sqrt(std::sin(hu) * std::sin(t_max - hu));
    }
    const double q = t_max * (w / ch) * ratio;
    aq.add(q);
    aq_sq.add(q * q);
  }
  const double an = static_cast<double>(cfg.samples);
  const double amean = aq.total() / an;
  const double avar = std::max(0.0, aq_sq.total() / an - amean * amean);
  const double r2 = r * r;
  props.area = 2.0 * std::numbers::pi * amean * r2;
  err.area = 2.0 * std::numbers::pi * std::sqrt(avar / an) * r2;

  props.std_error = err;
  return props;
}

}  // namespace oloid
