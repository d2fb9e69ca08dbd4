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

#include "qdepth/report.hpp"

#include <array>

namespace qdepth {

namespace {

constexpr std::array<std::pair<Formulation, std::string_view>, 5> kNames{{
    {Formulation::kLinear, "linear"},
    {Formulation::kGvsIp, "gvs-ip"},
    {Formulation::kGvsGreedy, "gvs-greedy"},
    {Formulation::kGvsCover, "gvs-cover"},
    {Formulation::kProductNative3, "product-native3"},
}};

}  // namespace

std::string_view formulation_name(Formulation f) {
  for (const auto& [value, name] : kNames) {
    if (value == f) return name;
  }
  return "unknown";
}

std::optional<Formulation> parse_formulation(std::string_view name) {
  for (const auto& [value, n] : kNames) {
    if (n == name) return value;
  }
  return std::nullopt;
}

DepthReport make_depth_report(Formulation formulation, int max_degree,
                              int num_ancillas,
                              std::vector<std::pair<VarId, int>> degrees) {
  DepthReport r;
  r.formulation = formulation;
  r.max_degree = max_degree;
  r.depth_lower = max_degree + 1;
  r.depth_upper = max_degree + 2;
  r.num_ancillas = num_ancillas;
  r.per_vertex_degrees = std::move(degrees);
  return r;
}

}  // namespace qdepth
