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

#include "qdepth/analysis.hpp"

#include "qdepth/error.hpp"
#include "qdepth/linear.hpp"
#include "qdepth/product.hpp"

namespace qdepth {

namespace {

void fill_gvs(Analysis& a, const SatInstance& instance,
              const CoverAssignment& cover, Formulation formulation) {
  a.cover = cover;
  a.report = gvs_depth_report(instance, cover, formulation);
  a.counted_max_degree = clause_count_degree_table(instance, cover).max_degree;
}

}  // namespace

Analysis analyze(const SatInstance& instance, const AnalyzeOptions& options) {
  Analysis a;
  a.instance = instance.source_name;
  switch (options.formulation) {
    case Formulation::kLinear: {
      a.lambda = options.lambda.value_or(default_linear_penalty(instance));
      a.report = linear_depth_report(instance, a.lambda);
      break;
    }
    case Formulation::kGvsIp: {
      SolveOptions solve;
      solve.budget = options.budget;
      solve.incumbent = greedy_cover(instance, options.seed).cover;
      IpSolution sol = solve_ip_exact(build_ip(instance), solve);
      fill_gvs(a, instance, sol.cover, Formulation::kGvsIp);
      a.report.solver_status = std::string(solve_status_name(sol.status));
      a.lower_bound = sol.lower_bound;
      a.objective = sol.objective_value;
      a.nodes = sol.nodes;
      a.optimal = sol.status == SolveStatus::kOptimal;
      break;
    }
    case Formulation::kGvsGreedy: {
      GreedySolution sol = greedy_cover(instance, options.seed);
      fill_gvs(a, instance, sol.cover, Formulation::kGvsGreedy);
      a.report.solver_status = "heuristic";
      a.seed = options.seed;
      break;
    }
    case Formulation::kGvsCover: {
      if (!options.cover) {
        throw Error(ErrorCode::kInvalidCover, "no cover supplied");
      }
      fill_gvs(a, instance, *options.cover, Formulation::kGvsCover);
      a.report.solver_status = "given";
      break;
    }
    case Formulation::kProductNative3: {
      InteractionGraph g = native3_graph(instance);
      EdgeColoring coloring = color_hyperedges(g);
      std::vector<std::pair<VarId, int>> degrees;
      for (const auto& v : g.vertices()) {
        degrees.emplace_back(v, static_cast<int>(g.degree(v)));
      }
      a.report = make_depth_report(Formulation::kProductNative3,
                                   static_cast<int>(g.max_degree()), 0,
                                   std::move(degrees));
      a.report.chromatic_index = coloring.num_colors;
      a.report.schedule_depth = coloring.num_colors + 1;
      a.chromatic_exact = g.num_edges() <= kExactColoringLimit;
      a.report.solver_status = a.chromatic_exact ? "exact" : "greedy";
      break;
    }
  }
  if (options.formulation != Formulation::kLinear) {
    a.lambda = options.lambda.value_or(default_gvs_penalty(instance));
    if (a.lambda <= Rational(0)) {
      throw Error(ErrorCode::kInvalidPenalty,
                  "penalty weight must be positive, got " + to_string(a.lambda));
    }
  }
  return a;
}

Formulated formulate(const SatInstance& instance, const Analysis& analysis) {
  std::vector<Polynomial> pieces;
  switch (analysis.report.formulation) {
    case Formulation::kLinear:
      pieces = linear_pieces(instance, analysis.lambda);
      break;
    case Formulation::kProductNative3:
      return {product_objective(instance), native3_graph(instance)};
    default:
      pieces = gvs_pieces(instance, *analysis.cover, analysis.lambda);
      break;
  }
  Formulated f;
  for (const auto& p : pieces) f.polynomial += p;
  f.graph = interaction_graph(pieces);
  return f;
}

CircuitSchedule schedule_for(const SatInstance& instance,
                             const Analysis& analysis) {
  Formulated f = formulate(instance, analysis);
  EdgeColoring coloring =
      analysis.report.formulation == Formulation::kProductNative3
          ? color_hyperedges(f.graph)
          : color_edges(f.graph);
  return build_schedule(f.polynomial, coloring);
}

}  // namespace qdepth
