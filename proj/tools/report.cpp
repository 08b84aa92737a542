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

#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace oloid {
namespace {

constexpr const char* kToolVersion = "0.1.0";

double rel_dev(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) {
    return 0.0;
  }
  return std::abs(a - b) / scale;
}

void require_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) {
    throw EvaluationError("report: non-finite value in " + what);
  }
}

void check_block_finite(const MethodBlock& b) {
  const std::string name = method_name(b.props.method);
  require_finite(b.props.area, name);
  require_finite(b.props.volume, name);
  require_finite(b.props.center_of_mass.x, name);
  require_finite(b.props.center_of_mass.y, name);
  require_finite(b.props.center_of_mass.z, name);
  const SymMat3& i = b.props.inertia;
  for (double v : {i.xx, i.yy, i.zz, i.xy, i.xz, i.yz}) {
    require_finite(v, name);
  }
  if (b.props.std_error) {
    require_finite(b.props.std_error->area, name);
    require_finite(b.props.std_error->volume, name);
    require_finite(b.props.std_error->center_of_mass.x, name);
    require_finite(b.props.std_error->center_of_mass.y, name);
    require_finite(b.props.std_error->center_of_mass.z, name);
    const SymMat3& s = b.props.std_error->inertia;
    for (double v : {s.xx, s.yy, s.zz, s.xy, s.xz, s.yz}) {
      require_finite(v, name);
    }
  }
}

void json_sym(std::ostream& os, const SymMat3& m) {
  os << "{\"xx\": " << format_double(m.xx) << ", \"yy\": "
     << format_double(m.yy) << ", \"zz\": " << format_double(m.zz)
     << ", \"xy\": " << format_double(m.xy) << ", \"xz\": "
     << format_double(m.xz) << ", \"yz\": " << format_double(m.yz) << "}";
}

void json_vec(std::ostream& os, const Vec3& v) {
  os << "[" << format_double(v.x) << ", " << format_double(v.y) << ", "
     << format_double(v.z) << "]";
}

}  // namespace

double block_deviation(const MassProperties& a, const MassProperties& b) {
  double d = rel_dev(a.area, b.area);
  d = std::max(d, rel_dev(a.volume, b.volume));
  d = std::max(d, rel_dev(a.inertia.xx, b.inertia.xx));
  d = std::max(d, rel_dev(a.inertia.yy, b.inertia.yy));
  d = std::max(d, rel_dev(a.inertia.zz, b.inertia.zz));
  return d;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void render_text(const ReportDocument& doc, std::ostream& os) {
  os << "oloid " << kToolVersion << "\n";
  os << "radius  = " << format_double(doc.spec.radius) << "\n";
  os << "density = " << format_double(doc.spec.density) << "\n\n";
  for (const MethodBlock& b : doc.blocks) {
    const MassProperties& p = b.props;
    os << "[" << method_name(p.method) << "]  (" << format_double(b.duration_ms)
       << " ms)\n";
    os << "  area    = " << format_double(p.area) << "\n";
    os << "  volume  = " << format_double(p.volume) << "\n";
    os << "  com     = (" << format_double(p.center_of_mass.x) << ", "
       << format_double(p.center_of_mass.y) << ", "
       << format_double(p.center_of_mass.z) << ")\n";
    os << "  I_xx    = " << format_double(p.inertia.xx) << "\n";
    os << "  I_yy    = " << format_double(p.inertia.yy) << "\n";
    os << "  I_zz    = " << format_double(p.inertia.zz) << "\n";
    os << "  I_xy    = " << format_double(p.inertia.xy)
       << "  I_xz = " << format_double(p.inertia.xz)
       << "  I_yz = " << format_double(p.inertia.yz) << "\n";
    if (p.std_error) {
      os << "  se(vol) = " << format_double(p.std_error->volume)
         << "  se(I_xx) = " << format_double(p.std_error->inertia.xx)
         << "  se(area) = " << format_double(p.std_error->area) << "\n";
    }
    os << "\n";
  }
  if (doc.blocks.size() > 1) {
    os << "pairwise max relative deviation (area/volume/diagonal inertia):\n";
    for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < doc.blocks.size(); ++j) {
        os << "  " << method_name(doc.blocks[i].props.method) << " vs "
           << method_name(doc.blocks[j].props.method) << " = "
           << format_double(
                  block_deviation(doc.blocks[i].props, doc.blocks[j].props))
           << "\n";
      }
    }
  }
}

void render_json(const ReportDocument& doc, std::ostream& os) {
  for (const MethodBlock& b : doc.blocks) {
    check_block_finite(b);
  }
  os << "{\n";
  os << "  \"tool\": \"oloid\",\n";
  os << "  \"version\": \"" << kToolVersion << "\",\n";
  os << "  \"spec\": {\"radius\": " << format_double(doc.spec.radius)
     << ", \"density\": " << format_double(doc.spec.density) << "},\n";
  os << "  \"config\": {\"mc_samples\": " << doc.config.mc_samples
     << ", \"seed\": " << doc.config.seed
     << ", \"m_nodes\": " << doc.config.m_nodes
     << ", \"t_levels\": " << doc.config.t_levels
     << ", \"n_m\": " << doc.config.n_m << ", \"n_t\": " << doc.config.n_t
     << "},\n";
  os << "  \"methods\": {\n";
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    const MassProperties& p = doc.blocks[i].props;
    os << "    \"" << method_name(p.method) << "\": {\n";
    os << "      \"area\": " << format_double(p.area) << ",\n";
    os << "      \"volume\": " << format_double(p.volume) << ",\n";
    os << "      \"center_of_mass\": ";
    json_vec(os, p.center_of_mass);
    os << ",\n      \"inertia\": ";
    json_sym(os, p.inertia);
    if (p.std_error) {
      os << ",\n      \"std_error\": {\"area\": "
         << format_double(p.std_error->area)
         << ", \"volume\": " << format_double(p.std_error->volume)
         << ", \"center_of_mass\": ";
      json_vec(os, p.std_error->center_of_mass);
      os << ", \"inertia\": ";
      json_sym(os, p.std_error->inertia);
      os << "}";
    }
    os << "\n    }" << (i + 1 < doc.blocks.size() ? "," : "") << "\n";
  }
  os << "  },\n";
  os << "  \"deviations\": {\n    \"methods\": [";
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    os << "\"" << method_name(doc.blocks[i].props.method) << "\""
       << (i + 1 < doc.blocks.size() ? ", " : "");
  }
  os << "],\n    \"matrix\": [\n";
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    os << "      [";
    for (std::size_t j = 0; j < doc.blocks.size(); ++j) {
      os << format_double(
                block_deviation(doc.blocks[i].props, doc.blocks[j].props))
         << (j + 1 < doc.blocks.size() ? ", " : "");
    }
    os << "]" << (i + 1 < doc.blocks.size() ? "," : "") << "\n";
  }
  os << "    ]\n  }\n}\n";
}

}  // namespace oloid
