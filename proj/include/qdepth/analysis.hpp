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

// End-to-end pipelines shared by the command-line tool and the tests.

#ifndef QDEPTH_ANALYSIS_HPP_
#define QDEPTH_ANALYSIS_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "qdepth/cnf.hpp"
#include "qdepth/gvs.hpp"
#include "qdepth/optimize.hpp"
#include "qdepth/pubo.hpp"
#include "qdepth/report.hpp"
#include "qdepth/schedule.hpp"

namespace qdepth {

struct AnalyzeOptions {
  Formulation formulation = Formulation::kLinear;
  std::uint64_t seed = 0;
  std::optional<Rational> lambda;  // formulation default when unset
  std::optional<std::chrono::duration<double>> budget;
  std::optional<CoverAssignment> cover;  // required for kGvsCover
};

struct Analysis {
  std::string instance;
  DepthReport report;
  Rational lambda;
  std::optional<CoverAssignment> cover;
  // Substitution formulations: the largest degree-row value, which counts a
  // clause per u-x edge even when clauses share a variable set.
  std::optional<int> counted_max_degree;
  std::optional<int> lower_bound;  // proven bound on counted_max_degree
  std::optional<Rational> objective;
  std::optional<std::int64_t> nodes;
  std::optional<std::uint64_t> seed;
  bool chromatic_exact = false;
  bool optimal = true;  // false when the exact solver ran out of budget
};

Analysis analyze(const SatInstance& instance, const AnalyzeOptions& options);

// The polynomial the formulation optimizes and the derived graph it induces.
// The graph is built from the unsummed pieces, so it can have edges whose
// terms cancel in the polynomial.
struct Formulated {
  Polynomial polynomial;
  InteractionGraph graph;
};

Formulated formulate(const SatInstance& instance, const Analysis& analysis);

// Colors the derived graph (hyperedges for the native three-qubit mode) and
// lays out the schedule.
CircuitSchedule schedule_for(const SatInstance& instance,
                             const Analysis& analysis);

}  // namespace qdepth

#endif  // QDEPTH_ANALYSIS_HPP_
