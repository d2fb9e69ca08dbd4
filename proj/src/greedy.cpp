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

#include <algorithm>
#include <random>

#include "qdepth/linear.hpp"
#include "qdepth/optimize.hpp"

namespace qdepth {

CoverScore score_cover(const SatInstance& instance,
                       const CoverAssignment& cover) {
  return {clause_count_degree_table(instance, cover).max_degree,
          cover.num_subs()};
}

GreedySolution greedy_cover(const SatInstance& instance, std::uint64_t seed) {
  ExpansionSets sets = expansion_sets(instance);
  std::vector<PairId> remaining(sets.S.begin(), sets.S.end());
  std::map<PairId, std::vector<int>> clauses_of;
  for (int c = 0; c < static_cast<int>(instance.clauses.size()); ++c) {
    for (const auto& cov : sets.coverings[c]) clauses_of[cov.pair].push_back(c);
  }

  std::mt19937_64 rng(seed);
  std::vector<PairId> chosen(instance.clauses.size());
  std::vector<char> covered(instance.clauses.size(), 0);
  std::size_t left = instance.clauses.size();
  std::vector<std::size_t> ties;
  while (left > 0) {
    int best = 0;
    ties.clear();
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      const auto& list = clauses_of[remaining[k]];
      int count = static_cast<int>(std::count_if(
          list.begin(), list.end(), [&](int c) { return !covered[c]; }));
      if (count > best) {
        best = count;
        ties.clear();
      }
      if (count == best && count > 0) ties.push_back(k);
    }
    std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
    std::size_t k = ties[pick(rng)];
    for (int c : clauses_of[remaining[k]]) {
      if (covered[c]) continue;
      covered[c] = 1;
      chosen[c] = remaining[k];
      --left;
    }
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(k));
  }

  GreedySolution sol;
  sol.cover = CoverAssignment::from_pairs(instance, chosen);
  CoverScore s = score_cover(instance, sol.cover);
  sol.max_degree = s.max_degree;
  sol.num_subs = s.num_subs;
  sol.graph_max_degree = gvs_degree_table(instance, sol.cover).max_degree;
  sol.seed = seed;
  return sol;
}

double median(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

ComparisonRow compare(const SatInstance& instance,
                      const CompareOptions& options) {
  ComparisonRow row;
  row.instance = instance.source_name;
  if (options.linear) {
    row.linear_depth = linear_depth_report(instance).depth_upper;
  }

  std::optional<GreedySolution> best_greedy;
  if (options.greedy && !options.seeds.empty()) {
    std::vector<int> depths;
    std::vector<int> subs;
    for (auto seed : options.seeds) {
      GreedySolution g = greedy_cover(instance, seed);
      row.greedy.push_back({seed, g.max_degree + 2, g.num_subs});
      depths.push_back(g.max_degree + 2);
      subs.push_back(g.num_subs);
      if (!best_greedy || CoverScore{g.max_degree, g.num_subs} <
                              CoverScore{best_greedy->max_degree,
                                         best_greedy->num_subs}) {
        best_greedy = std::move(g);
      }
    }
    row.greedy_depth_median = median(depths);
    row.greedy_subs_median = median(subs);
  }

  if (options.ip) {
    SolveOptions solve;
    solve.budget = options.budget;
    if (best_greedy) solve.incumbent = best_greedy->cover;
    IpSolution sol = solve_ip_exact(build_ip(instance), solve);
    row.ip_depth = sol.max_degree + 2;
    row.ip_subs = sol.num_subs;
    row.ip_status = sol.status;
    row.ip_lower_bound = sol.lower_bound + 2;
    row.ip_graph_depth = sol.graph_max_degree + 2;
  }
  if (options.budget) row.budget_secs = options.budget->count();
  return row;
}

}  // namespace qdepth
