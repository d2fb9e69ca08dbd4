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

// Choosing a cover: the min-max-degree integer program, an exact
// branch-and-bound solver for it, and the randomized greedy covering.

#ifndef QDEPTH_OPTIMIZE_HPP_
#define QDEPTH_OPTIMIZE_HPP_

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdepth/cnf.hpp"
#include "qdepth/gvs.hpp"
#include "qdepth/product.hpp"
#include "qdepth/pubo.hpp"

namespace qdepth {

// Integer program over y_s (pair s substituted), z(c, s, x_k) (clause c
// covered by s with k free) and the integer bound obj:
//   minimize obj + penalty * sum_s y_s
//   vertex rows:  sum_{s in S_a} (4 - [s in P_a]) y_s + |P_a|
//                   + sum_{z with free var a} z <= obj
//   pair rows:    5 + sum_{z using s} z <= obj
//   cover rows:   sum of the three z of clause c = 1
//   link rows:    z(c, s, x_k) <= y_s
struct IpModel {
  struct ZVar {
    int clause = 0;
    Covering covering;
    int pair = 0;  // index into pairs
  };
  struct Term {
    int var = 0;   // index into pairs (y) or zvars (z)
    int coeff = 1;
  };
  struct DegreeRow {
    std::string name;
    std::vector<Term> y;
    std::vector<Term> z;
    int constant = 0;
  };

  SatInstance instance;
  std::vector<PairId> pairs;  // S, ascending
  std::vector<ZVar> zvars;    // three per clause, in clause order
  std::vector<DegreeRow> vertex_rows;
  std::vector<DegreeRow> pair_rows;
  std::vector<std::array<int, 3>> cover_rows;  // zvar indices per clause
  Rational penalty;  // 1 / (10 |C|); zero for the empty instance

  int pair_index(const PairId& p) const;
};

IpModel build_ip(const SatInstance& instance);

// CPLEX LP text with binary y/z and integer obj.
std::string export_lp(const IpModel& model);

enum class SolveStatus {
  kOptimal,
  kFeasibleBound,  // max degree proven optimal, substitution count not
  kTimedOut,       // max degree not proven; lower_bound is the best bound
};

std::string_view solve_status_name(SolveStatus status);

struct IpSolution {
  CoverAssignment cover;
  int max_degree = 0;        // the optimized obj, clause-counted
  int graph_max_degree = 0;  // max degree of the derived graph
  int num_subs = 0;
  Rational objective_value;  // max_degree + penalty * num_subs
  SolveStatus status = SolveStatus::kOptimal;
  int lower_bound = 0;       // proven lower bound on max_degree
  std::int64_t nodes = 0;
};

struct SolveOptions {
  // Unset means unlimited.
  std::optional<std::chrono::duration<double>> budget;
  std::optional<CoverAssignment> incumbent;
};

// Exact: on kOptimal the cover minimizes (obj, substitutions)
// lexicographically, which is the order the penalty induces.
IpSolution solve_ip_exact(const IpModel& model, const SolveOptions& options);

struct GreedySolution {
  CoverAssignment cover;
  int num_subs = 0;
  int max_degree = 0;        // clause-counted, comparable with IpSolution
  int graph_max_degree = 0;
  std::uint64_t seed = 0;
};

// Repeatedly substitutes a pair covering the most uncovered clauses, ties
// drawn uniformly with the seeded generator.
GreedySolution greedy_cover(const SatInstance& instance, std::uint64_t seed);

// Lexicographic (obj, substitutions) evaluation of any cover, where obj is
// the largest left-hand side of the degree rows.
struct CoverScore {
  int max_degree = 0;
  int num_subs = 0;
  friend auto operator<=>(const CoverScore&, const CoverScore&) = default;
};
CoverScore score_cover(const SatInstance& instance,
                       const CoverAssignment& cover);

struct CompareOptions {
  bool linear = true;
  bool ip = true;
  bool greedy = true;
  std::vector<std::uint64_t> seeds;
  std::optional<std::chrono::duration<double>> budget;
};

struct GreedyRun {
  std::uint64_t seed = 0;
  int depth = 0;  // max degree + 2
  int subs = 0;
};

// One row of the depth comparison; depths use the max degree + 2 bound.
struct ComparisonRow {
  std::string instance;
  std::optional<int> linear_depth;
  std::optional<int> ip_depth;
  std::optional<int> ip_subs;
  std::optional<SolveStatus> ip_status;
  std::optional<int> ip_lower_bound;  // as a depth
  std::optional<int> ip_graph_depth;  // derived-graph degree + 2
  std::vector<GreedyRun> greedy;
  std::optional<double> greedy_depth_median;
  std::optional<double> greedy_subs_median;
  std::optional<double> budget_secs;
};

ComparisonRow compare(const SatInstance& instance,
                      const CompareOptions& options);

// Median with the two middle values averaged; requires a non-empty input.
double median(std::vector<int> values);

}  // namespace qdepth

#endif  // QDEPTH_OPTIMIZE_HPP_
