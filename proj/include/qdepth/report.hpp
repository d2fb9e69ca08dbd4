// Copyright 2026 The qdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDEPTH_REPORT_HPP_
#define QDEPTH_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdepth/pubo.hpp"

namespace qdepth {

enum class Formulation {
  kLinear,
  kGvsIp,
  kGvsGreedy,
  kGvsCover,  // GVS with a caller-supplied cover
  kProductNative3,
};

std::string_view formulation_name(Formulation f);
std::optional<Formulation> parse_formulation(std::string_view name);

// Depth of one QAOA layer for one formulation of one instance. For simple
// derived graphs the chromatic index is max_degree or max_degree + 1, so
// depth_lower = max_degree + 1 and depth_upper = max_degree + 2.
struct DepthReport {
  Formulation formulation = Formulation::kLinear;
  int max_degree = 0;
  int depth_lower = 1;
  int depth_upper = 2;
  int num_ancillas = 0;
  std::optional<int> num_subs;
  // Native-gate mode only: exact or greedy chromatic index and depth.
  std::optional<int> chromatic_index;
  std::optional<int> schedule_depth;
  std::vector<std::pair<VarId, int>> per_vertex_degrees;
  std::string solver_status = "closed-form";
};

DepthReport make_depth_report(Formulation formulation, int max_degree,
                              int num_ancillas,
                              std::vector<std::pair<VarId, int>> degrees);

}  // namespace qdepth

#endif  // QDEPTH_REPORT_HPP_
