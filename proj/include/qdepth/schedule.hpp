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

// Gate schedules for one cost layer: a proper edge coloring of the derived
// graph puts every color class in one layer of commuting, qubit-disjoint
// gates, followed by a single mixer layer.

#ifndef QDEPTH_SCHEDULE_HPP_
#define QDEPTH_SCHEDULE_HPP_

#include <map>
#include <vector>

#include "qdepth/pubo.hpp"

namespace qdepth {

struct EdgeColoring {
  std::map<Monomial, int> colors;  // edge support -> 0-based color
  int num_colors = 0;
};

// Misra-Gries: at most max_degree + 1 colors. Throws kNotSimpleGraph if some
// edge has more than two vertices.
EdgeColoring color_edges(const InteractionGraph& g);

// Colors (hyper)edges so that edges sharing a vertex differ. Greedy in
// general; exhaustive, hence optimal, when there are at most
// kExactColoringLimit edges.
inline constexpr std::size_t kExactColoringLimit = 12;
EdgeColoring color_hyperedges(const InteractionGraph& g);

bool is_proper(const InteractionGraph& g, const EdgeColoring& coloring);

struct Gate {
  Monomial support;      // two or more qubits, or one for a local term
  Rational coefficient;  // of the term on exactly this support
  // Terms on proper subsets of the support that this gate also applies.
  std::vector<std::pair<Monomial, Rational>> merged;
};

struct CircuitSchedule {
  std::vector<VarId> qubits;                 // qubit index -> variable
  std::vector<std::vector<Gate>> cost_layers;
  Rational dropped_constant;                 // global phase
  // Mixer layer included.
  int depth() const { return static_cast<int>(cost_layers.size()) + 1; }
};

// Layer k holds the terms colored k. A multi-qubit term without a color of
// its own is merged into the first colored edge containing it. One-variable
// terms go to the first layer where their qubit is idle, or are merged into a
// gate on that qubit, so they never add a layer unless there are no
// multi-qubit terms at all. Empty color classes are skipped. Throws
// kImproperColoring if a term fits no colored edge or a layer reuses a qubit.
CircuitSchedule build_schedule(const Polynomial& p,
                               const EdgeColoring& coloring);

}  // namespace qdepth

#endif  // QDEPTH_SCHEDULE_HPP_
