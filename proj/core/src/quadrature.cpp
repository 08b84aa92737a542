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

#include "oloid/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "oloid/surface.hpp"

namespace oloid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfSqrt3 = 0.86602540378443864676;

// Neumaier compensated summation; keeps long quadrature and sampling sums
// deterministic to the last bit for a fixed evaluation order.
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

// One tanh-sinh node: distance of the abscissa from the nearer endpoint and
// the quadrature weight, both per unit interval half-length.  Computed via
// e^{-2|g|} so the distance underflows gracefully instead of cancelling.
struct DeNode {
  double dist = 0.0;
  double weight = 0.0;
};

bool de_node(double v, DeNode* out) {
  const double g = 0.5 * kPi * std::sinh(std::abs(v));
  const double eg = std::exp(-2.0 * g);  // in (0, 1]
  const double dist = 2.0 * eg / (1.0 + eg);
  const double sech = 2.0 * std::exp(-g) / (1.0 + eg);
  const double weight = 0.5 * kPi * std::cosh(v) * sech * sech;
  if (dist == 0.0 || weight == 0.0) {
    return false;
  }
  out->dist = dist;
  out->weight = weight;
  return true;
}

void check_de_args(int levels, double tol) {
  if (levels < 1) {
    throw std::domain_error("de_integrate: levels must be >= 1");
  }
  if (!(std::isfinite(tol) && tol > 0.0)) {
    throw std::domain_error("de_integrate: tol must be finite and > 0");
  }
}

// Folded tanh-sinh over u in (0, t_max), where the integrand receives the
// exact distance u from the singular edge as its argument.  This sidesteps
// the endpoint quantization of the generic interval transform: u is the
// abscissa itself, representable down to the underflow threshold, so a
// 1/sqrt(u) singularity is resolved to full precision.
struct EdgeIntegrand {
  virtual double operator()(double u) const = 0;
  virtual ~EdgeIntegrand() = default;
};

DeResult integrate_edge(const EdgeIntegrand& q, int levels, double tol) {
  check_de_args(levels, tol);
  const double b = t_max;
  const double half = 0.5 * b;

  const auto eval = [&](double v_signed, Neumaier* acc) -> bool {
    DeNode nd;
    if (!de_node(v_signed, &nd)) {
      return false;
    }
    const double u =
        v_signed < 0.0 ? half * nd.dist : b - half * nd.dist;
    if (!(u > 0.0 && u < b)) {
      return false;
    }
    const double qu = q(u);
    if (!std::isfinite(qu)) {
      throw EvaluationError("integrand is non-finite at an interior node");
    }
    acc->add(nd.weight * qu);
    return true;
  };

  DeResult res;
  double h = 1.0;
  Neumaier base;
  eval(0.0, &base);
  for (long k = 1;; ++k) {
    const bool neg = eval(-static_cast<double>(k) * h, &base);
    const bool pos = eval(static_cast<double>(k) * h, &base);
    if (!neg && !pos) {
      break;
    }
  }
  double value = half * h * base.total();
  res.levels_used = 1;

  for (int level = 2; level <= levels; ++level) {
    h *= 0.5;
    Neumaier odd;
    for (long k = 1;; k += 2) {
      const bool neg = eval(-static_cast<double>(k) * h, &odd);
      const bool pos = eval(static_cast<double>(k) * h, &odd);
      if (!neg && !pos) {
        break;
      }
    }
    const double next = 0.5 * value + half * h * odd.total();
    const double delta = std::abs(next - value);
    const double scale =
        std::max({std::abs(next), std::abs(value), 1e-300});
    value = next;
    res.levels_used = level;
    res.last_delta = delta / scale;
    if (delta <= tol * scale) {
      res.converged = true;
      break;
    }
  }
  res.value = value;
  return res;
}

// Per-ruling trigonometric factors at t = tsign*(t_max - u), with the
// singular sqrt(2 cos t + 1) computed from u by the product identity and
// everything smooth computed directly.
struct Frame {
  double c = 0.0;    // cos t
  double s = 0.0;    // sin t
  double cp1 = 0.0;  // cos t + 1
  double sq = 0.0;   // sqrt(2 cos t + 1)
  double ch = 0.0;   // cos(t/2)
};

Frame make_frame(double u, double tsign) {
  Frame f;
  const double cu = std::cos(u);
  const double su = std::sin(u);
  f.c = -0.5 * cu + kHalfSqrt3 * su;
  f.s = tsign * (kHalfSqrt3 * cu + 0.5 * su);
  f.cp1 = f.c + 1.0;
  const double hu = 0.5 * u;
  f.sq = 2.0 * std::sqrt(std::sin(hu) * std::sin(t_max - hu));
  f.ch = 0.5 * std::cos(hu) + kHalfSqrt3 * std::sin(hu);
  return f;
}

Vec3 frame_position(const Frame& f, double m, double zsign, double r) {
  return Vec3{-0.5 + m / f.cp1 + (m - 1.0) * f.c, (1.0 - m) * f.s,
              zsign * m * f.sq / f.cp1} *
         r;
}

Vec3 frame_normal(const Frame& f, double m, double zsign, double r2) {
  const double w = (2.0 - 3.0 * m) * f.c + 1.0;
  return Vec3{f.c * ((3.0 * m - 2.0) * f.c - 1.0) / (f.cp1 * f.sq),
              f.s * w / (f.cp1 * f.sq), zsign * w / f.cp1} *
         r2;
}

struct FluxEdgeIntegrand : EdgeIntegrand {
  const FluxField* field;
  const std::vector<GlNode>* rule;
  double r;
  double r2;

  double operator()(double u) const override {
    Neumaier acc;
    for (const double tsign : {1.0, -1.0}) {
      const Frame f = make_frame(u, tsign);
      for (const double zsign : {1.0, -1.0}) {
        for (const GlNode& gl : *rule) {
          const Vec3 p = frame_position(f, gl.node, zsign, r);
          const Vec3 n = frame_normal(f, gl.node, zsign, r2);
          acc.add(gl.weight * dot(field->evaluator(p), n));
        }
      }
    }
    return acc.total();
  }
};

struct AreaEdgeIntegrand : EdgeIntegrand {
  const std::vector<GlNode>* rule;

  double operator()(double u) const override {
    Neumaier acc;
    for (const double tsign : {1.0, -1.0}) {
      const Frame f = make_frame(u, tsign);
      for (int sheet = 0; sheet < 2; ++sheet) {
        for (const GlNode& gl : *rule) {
          const double w = (2.0 - 3.0 * gl.node) * f.c + 1.0;
          acc.add(gl.weight * w / (f.ch * f.sq));
        }
      }
    }
    return acc.total();
  }
};

void check_quadrature_config(const QuadratureConfig& cfg) {
  if (cfg.m_nodes < 1) {
    throw std::domain_error("QuadratureConfig: m_nodes must be >= 1");
  }
  if (cfg.t_levels < 2) {
    throw std::domain_error("QuadratureConfig: t_levels must be >= 2");
  }
  if (!(std::isfinite(cfg.t_tolerance) && cfg.t_tolerance > 0.0)) {
    throw std::domain_error(
        "QuadratureConfig: t_tolerance must be finite and > 0");
  }
}

double reduced_Ixx_from(double c, double ch, double sq, double t) {
  const double c2 = std::cos(2.0 * t);
  const double c3 = std::cos(3.0 * t);
  const double c4 = std::cos(4.0 * t);
  const double c5 = std::cos(5.0 * t);
  const double c6 = std::cos(6.0 * t);
  const double poly = -2510.0 * c + 547.0 * c2 + 1129.0 * c3 + 648.0 * c4 +
                      181.0 * c5 + 21.0 * c6 - 1744.0;
  const double ch2 = ch * ch;
  const double ch8 = ch2 * ch2 * ch2 * ch2;
  return -(c * c) * poly / (15360.0 * ch8 * sq);
}

double reduced_Iyy_from(double c, double tn, double sq, double t) {
  const double c2 = std::cos(2.0 * t);
  const double c3 = std::cos(3.0 * t);
  const double c4 = std::cos(4.0 * t);
  const double poly =
      542.0 * c + 322.0 * c2 + 122.0 * c3 + 21.0 * c4 + 361.0;
  return poly * tn * tn / (240.0 * sq);
}

// Reduced integrands re-parametrized by edge distance u; both are even in
// t, so one sign is evaluated and doubled.
struct ReducedEdgeIntegrand : EdgeIntegrand {
  bool yy = false;

  double operator()(double u) const override {
    const double t = t_max - u;
    const double hu = 0.5 * u;
    const double sq = 2.0 * std::sqrt(std::sin(hu) * std::sin(t_max - hu));
    const double c = -0.5 * std::cos(u) + kHalfSqrt3 * std::sin(u);
    if (yy) {
      return 2.0 * reduced_Iyy_from(c, std::tan(0.5 * t), sq, t);
    }
    const double ch = 0.5 * std::cos(hu) + kHalfSqrt3 * std::sin(hu);
    return 2.0 * reduced_Ixx_from(c, ch, sq, t);
  }
};

double reduced_route(const OloidSpec& spec, const QuadratureConfig& cfg,
                     bool yy) {
  spec.validate();
  check_quadrature_config(cfg);
  ReducedEdgeIntegrand q;
  q.yy = yy;
  const DeResult res = integrate_edge(q, cfg.t_levels, cfg.t_tolerance);
  const double r = spec.radius;
  return res.value * spec.density * r * r * r * r * r;
}

}  // namespace

std::vector<GlNode> gauss_legendre(int n) {
  if (n < 1) {
    throw std::domain_error("gauss_legendre: n must be >= 1");
  }
  std::vector<double> x(n);
  std::vector<double> w(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton on the recurrence.
    double xi = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = xi;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * xi * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
      const double dx = -p1 / dp;
      xi += dx;
      if (std::abs(dx) <= 4.0 * std::numeric_limits<double>::epsilon()) {
        break;
      }
    }
    // Recompute the derivative at the converged root for the weight.
    {
      double p0 = 1.0;
      double p1 = xi;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * xi * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
    }
    const double wi = 2.0 / ((1.0 - xi * xi) * dp * dp);
    x[i] = xi;
    w[i] = wi;
    x[n - 1 - i] = -xi;
    w[n - 1 - i] = wi;
  }
  // The guesses above walk from +1 down, so reversing gives ascending order
  // on [0, 1] after the affine map.
  std::vector<GlNode> rule(n);
  for (int i = 0; i < n; ++i) {
    rule[i].node = 0.5 * (1.0 + x[n - 1 - i]);
    rule[i].weight = 0.5 * w[n - 1 - i];
  }
  return rule;
}

DeResult de_integrate(const std::function<double(double)>& f, double a,
                      double b, int levels, double tol) {
  if (!(std::isfinite(a) && std::isfinite(b) && a < b)) {
    throw std::domain_error("de_integrate: need finite a < b");
  }
  check_de_args(levels, tol);
  const double half = 0.5 * (b - a);

  const auto eval = [&](double v_signed, Neumaier* acc) -> bool {
    DeNode nd;
    if (!de_node(v_signed, &nd)) {
      return false;
    }
    const double x =
        v_signed < 0.0 ? a + half * nd.dist : b - half * nd.dist;
    if (!(x > a && x < b)) {
      return false;
    }
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      throw EvaluationError(
          "de_integrate: integrand is non-finite at an interior node");
    }
    acc->add(nd.weight * fx);
    return true;
  };

  DeResult res;
  double h = 1.0;
  Neumaier base;
  eval(0.0, &base);
  for (long k = 1;; ++k) {
    const bool neg = eval(-static_cast<double>(k) * h, &base);
    const bool pos = eval(static_cast<double>(k) * h, &base);
    if (!neg && !pos) {
      break;
    }
  }
  double value = half * h * base.total();
  res.levels_used = 1;

  for (int level = 2; level <= levels; ++level) {
    h *= 0.5;
    Neumaier odd;
    for (long k = 1;; k += 2) {
      const bool neg = eval(-static_cast<double>(k) * h, &odd);
      const bool pos = eval(static_cast<double>(k) * h, &odd);
      if (!neg && !pos) {
        break;
      }
    }
    const double next = 0.5 * value + half * h * odd.total();
    const double delta = std::abs(next - value);
    const double scale =
        std::max({std::abs(next), std::abs(value), 1e-300});
    value = next;
    res.levels_used = level;
    res.last_delta = delta / scale;
    if (delta <= tol * scale) {
      res.converged = true;
      break;
    }
  }
  res.value = value;
  return res;
}

double flux_integral(const FluxField& field, const OloidSpec& spec,
                     const QuadratureConfig& cfg) {
  spec.validate();
  check_quadrature_config(cfg);
  if (!field.evaluator) {
    throw std::domain_error("flux_integral: field has no evaluator");
  }
  const std::vector<GlNode> rule = gauss_legendre(cfg.m_nodes);
  FluxEdgeIntegrand q;
  q.field = &field;
  q.rule = &rule;
  q.r = spec.radius;
  q.r2 = spec.radius * spec.radius;
  return integrate_edge(q, cfg.t_levels, cfg.t_tolerance).value;
}

double surface_area(const OloidSpec& spec, const QuadratureConfig& cfg) {
  spec.validate();
  check_quadrature_config(cfg);
  const std::vector<GlNode> rule = gauss_legendre(cfg.m_nodes);
  AreaEdgeIntegrand q;
  q.rule = &rule;
  const DeResult res = integrate_edge(q, cfg.t_levels, cfg.t_tolerance);
  return res.value * spec.radius * spec.radius;
}

MassProperties quadrature_mass_properties(const OloidSpec& spec,
                                          const QuadratureConfig& cfg) {
  spec.validate();
  check_quadrature_config(cfg);
  const auto flux = [&](std::function<Vec3(const Vec3&)> f,
                        const char* name) {
    return flux_integral(FluxField{std::move(f), name}, spec, cfg);
  };

  const double vol =
      flux([](const Vec3& p) { return Vec3{p.x, 0.0, 0.0}; }, "volume");
  const double mx = flux(
      [](const Vec3& p) {
        return Vec3{0.5 * p.x * p.x, 0.0, 0.0};
      },
      "moment_x");
  const double my = flux(
      [](const Vec3& p) {
        return Vec3{0.0, 0.5 * p.y * p.y, 0.0};
      },
      "moment_y");
  const double mz = flux(
      [](const Vec3& p) {
        return Vec3{0.0, 0.0, 0.5 * p.z * p.z};
      },
      "moment_z");
  const double rxx = flux(
      [](const Vec3& p) {
        return Vec3{p.x * (p.y * p.y + p.z * p.z), 0.0, 0.0};
      },
      "second_xx");
  const double ryy = flux(
      [](const Vec3& p) {
        return Vec3{0.0, p.y * (p.x * p.x + p.z * p.z), 0.0};
      },
      "second_yy");
  const double rzz = flux(
      [](const Vec3& p) {
        return Vec3{0.0, 0.0, p.z * (p.x * p.x + p.y * p.y)};
      },
      "second_zz");
  const double pxy = flux(
      [](const Vec3& p) {
        return Vec3{0.5 * p.x * p.x * p.y, 0.0, 0.0};
      },
      "product_xy");
  const double pxz = flux(
      [](const Vec3& p) {
        return Vec3{0.5 * p.x * p.x * p.z, 0.0, 0.0};
      },
      "product_xz");
  const double pyz = flux(
      [](const Vec3& p) {
        return Vec3{0.0, 0.5 * p.y * p.y * p.z, 0.0};
      },
      "product_yz");

  MassProperties props;
  props.method = Method::kQuadrature;
  props.area = surface_area(spec, cfg);
  props.volume = vol;
  props.center_of_mass = {mx / vol, my / vol, mz / vol};
  const double rho = spec.density;
  props.inertia.xx = rho * rxx;
  props.inertia.yy = rho * ryy;
  props.inertia.zz = rho * rzz;
  props.inertia.xy = -rho * pxy;
  props.inertia.xz = -rho * pxz;
  props.inertia.yz = -rho * pyz;
  return props;
}

double reduced_integrand_Ixx(double t) {
  if (!(std::isfinite(t) && std::abs(t) < t_max)) {
    throw std::domain_error("reduced_integrand_Ixx: need |t| < 2*pi/3");
  }
  const double sq = std::sqrt(two_cos_plus_one(t));
  return reduced_Ixx_from(std::cos(t), std::cos(0.5 * t), sq, t);
}

double reduced_integrand_Iyy(double t) {
  if (!(std::isfinite(t) && std::abs(t) < t_max)) {
    throw std::domain_error("reduced_integrand_Iyy: need |t| < 2*pi/3");
  }
  const double sq = std::sqrt(two_cos_plus_one(t));
  return reduced_Iyy_from(std::cos(t), std::tan(0.5 * t), sq, t);
}

double reduced_route_Ixx(const OloidSpec& spec, const QuadratureConfig& cfg) {
  return reduced_route(spec, cfg, false);
}

double reduced_route_Iyy(const OloidSpec& spec, const QuadratureConfig& cfg) {
  return reduced_route(spec, cfg, true);
}

}  // namespace oloid
