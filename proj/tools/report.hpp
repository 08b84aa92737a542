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

#ifndef OLOID_TOOLS_REPORT_HPP_
#define OLOID_TOOLS_REPORT_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "oloid/types.hpp"

namespace oloid {

// One method's results plus how long it took.  Durations appear in the text
// rendering only; JSON output must be byte-identical across runs for fixed
// inputs, and wall time is not.
struct MethodBlock {
  MassProperties props;
  double duration_ms = 0.0;
};

struct ReportConfig {
  std::uint64_t mc_samples = 1000000;
  std::uint64_t seed = 0;
  int m_nodes = 5;
  int t_levels = 10;
  int n_m = 64;
  int n_t = 128;
};

struct ReportDocument {
  OloidSpec spec;
  ReportConfig config;
  std::vector<MethodBlock> blocks;
};

// Relative deviation between two method blocks: the maximum over area,
// volume, I_xx, I_yy, I_zz of |a - b| / max(|a|, |b|).  Center of mass and
// inertia off-diagonals are near zero by symmetry, so a relative measure
// there would be noise.
double block_deviation(const MassProperties& a, const MassProperties& b);

// 17 significant digits (%.17g): enough to round-trip any double, and a
// fixed width so output is byte-stable.
std::string format_double(double v);

// Human-readable report: per-method tables, deviation matrix, durations.
void render_text(const ReportDocument& doc, std::ostream& os);

// Machine-readable report: single JSON document, fixed key order, %.17g
// numerics, no volatile fields.  Throws EvaluationError if any numeric
// field is not finite.
void render_json(const ReportDocument& doc, std::ostream& os);

}  // namespace oloid

#endif  // OLOID_TOOLS_REPORT_HPP_
