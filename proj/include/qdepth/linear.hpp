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

// Linear 3-SAT formulation: maximize the number of satisfied-clause
// indicators subject to one slack-completed equality per clause, dualized
// into a quadratic penalty.

#ifndef QDEPTH_LINEAR_HPP_
#define QDEPTH_LINEAR_HPP_

#include <vector>

#include "qdepth/cnf.hpp"
#include "qdepth/pubo.hpp"
#include "qdepth/report.hpp"

namespace qdepth {

struct LinearModel {
  Polynomial objective;  // sum of z_c
  // One affine residual per clause:
  //   f_c = sum_{positive}(1 - x) + sum_{negated} x + d_c1 + d_c2 - (2 + z_c)
  std::vector<Polynomial> constraints;

  int num_ancillas() const { return 3 * static_cast<int>(constraints.size()); }
};

LinearModel build_linear_model(const SatInstance& instance);

// |C| + 1: one violated constraint costs more than every indicator combined.
Rational default_linear_penalty(const SatInstance& instance);

// sum_c (z_c - lambda * f_c^2), to be maximized. Throws kInvalidPenalty when
// lambda <= 0.
Polynomial dualize_linear(const SatInstance& instance, const Rational& lambda);

// The same objective as separate pieces: the indicator sum followed by one
// -lambda * f_c^2 term per clause. The derived graph is built from these.
std::vector<Polynomial> linear_pieces(const SatInstance& instance,
                                      const Rational& lambda);

InteractionGraph linear_graph(const SatInstance& instance);

// deg(x_i) = 5|C_i| - sum_{j co-occurring with i} (|C_ij| - 1).
// Throws kIsolatedVariable if i occurs in no clause.
int linear_degree_closed_form(const SatInstance& instance, int var);
int linear_degree_closed_form(const ClauseIncidence& incidence, int var);

// Slack and indicator vertices always have degree 5.
inline constexpr int kLinearAncillaDegree = 5;

DepthReport linear_depth_report(const SatInstance& instance,
                                const Rational& lambda);
DepthReport linear_depth_report(const SatInstance& instance);

}  // namespace qdepth

#endif  // QDEPTH_LINEAR_HPP_
