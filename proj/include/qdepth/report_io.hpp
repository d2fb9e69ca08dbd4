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

// JSON, CSV and text renderings of the command-line tool's results.

#ifndef QDEPTH_REPORT_IO_HPP_
#define QDEPTH_REPORT_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qdepth/analysis.hpp"
#include "qdepth/cnf.hpp"
#include "qdepth/optimize.hpp"
#include "qdepth/schedule.hpp"

namespace qdepth {

using Json = nlohmann::ordered_json;

// Every JSON document carries "kind" so one schema can dispatch on it.
Json analysis_json(const Analysis& a, std::optional<double> wall_time);
std::string analysis_csv(const Analysis& a);  // header plus one row
std::string analysis_text(const Analysis& a);

Json cover_json(const CoverAssignment& cover);
// Accepts a bare cover array or any object with a "cover" member.
CoverAssignment cover_from_json(const SatInstance& instance, const Json& j);

Json inspect_json(const SatInstance& instance,
                  const std::vector<std::string>& warnings);

struct ComparisonEntry {
  ComparisonRow row;
  std::string error;  // set when the instance failed
  std::optional<double> wall_time;
};
std::string comparison_csv(const std::vector<ComparisonEntry>& rows,
                           std::size_t num_seeds);
Json comparison_json(const std::vector<ComparisonEntry>& rows);

Json schedule_json(const CircuitSchedule& s);
std::string schedule_text(const CircuitSchedule& s);

// degree,count rows for the chosen vertex class.
std::string histogram_csv(const DepthReport& report, bool substitutions);

}  // namespace qdepth

#endif  // QDEPTH_REPORT_IO_HPP_
