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

#include "qdepth/report_io.hpp"

#include <fmt/format.h>

#include "qdepth/error.hpp"
#include "qdepth/product.hpp"

namespace qdepth {

namespace {

Json rational_json(const Rational& r) {
  return Json{{"exact", to_string(r)},
              {"value", boost::rational_cast<double>(r)}};
}

template <typename T>
std::string cell(const std::optional<T>& v) {
  return v ? fmt::format("{}", *v) : std::string();
}

// Quotes a CSV field when it holds a separator, quote or newline.
std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

Json cover_json(const CoverAssignment& cover) {
  Json arr = Json::array();
  for (std::size_t c = 0; c < cover.size(); ++c) {
    arr.push_back(Json{{"clause", c},
                       {"pair", {cover[c].pair.i, cover[c].pair.j}},
                       {"free", cover[c].free_var}});
  }
  return arr;
}

CoverAssignment cover_from_json(const SatInstance& instance, const Json& j) {
  const Json& arr = j.is_object() && j.contains("cover") ? j.at("cover") : j;
  if (!arr.is_array()) {
    throw Error(ErrorCode::kInvalidCover, "cover must be a JSON array");
  }
  std::vector<Covering> choices(arr.size());
  std::vector<char> seen(arr.size(), 0);
  try {
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const Json& e = arr[k];
      std::size_t c = e.value("clause", k);
      if (c >= arr.size() || seen[c]) {
        throw Error(ErrorCode::kInvalidCover,
                    fmt::format("cover entry {} names clause {} twice or out "
                                "of range", k, c));
      }
      seen[c] = 1;
      const Json& pair = e.at("pair");
      PairId p = PairId::of(pair.at(0).get<int>(), pair.at(1).get<int>());
      int free_var = 0;
      if (e.contains("free")) {
        free_var = e.at("free").get<int>();
      } else if (c < instance.clauses.size()) {
        for (int v : instance.clauses[c].variables()) {
          if (!p.contains(v)) free_var = v;
        }
      }
      choices[c] = Covering{p, free_var};
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kInvalidCover,
                fmt::format("malformed cover: {}", ex.what()));
  }
  return CoverAssignment(instance, std::move(choices));
}

Json analysis_json(const Analysis& a, std::optional<double> wall_time) {
  const DepthReport& r = a.report;
  Json j;
  j["kind"] = "depth-report";
  j["instance"] = a.instance;
  j["formulation"] = formulation_name(r.formulation);
  j["max_degree"] = r.max_degree;
  j["depth_lower"] = r.depth_lower;
  j["depth_upper"] = r.depth_upper;
  j["num_ancillas"] = r.num_ancillas;
  if (r.num_subs) j["num_subs"] = *r.num_subs;
  if (a.counted_max_degree) j["counted_max_degree"] = *a.counted_max_degree;
  if (r.chromatic_index) {
    j["chromatic_index"] = *r.chromatic_index;
    j["chromatic_exact"] = a.chromatic_exact;
  }
  if (r.schedule_depth) j["schedule_depth"] = *r.schedule_depth;
  j["solver_status"] = r.solver_status;
  if (a.lower_bound) j["lower_bound"] = *a.lower_bound;
  if (a.objective) j["objective"] = rational_json(*a.objective);
  if (a.nodes) j["nodes"] = *a.nodes;
  if (a.seed) j["seed"] = *a.seed;
  j["lambda"] = to_string(a.lambda);
  Json degrees = Json::object();
  for (const auto& [v, d] : r.per_vertex_degrees) degrees[v.name()] = d;
  j["per_vertex_degrees"] = std::move(degrees);
  if (a.cover) j["cover"] = cover_json(*a.cover);
  if (wall_time) j["wall_time"] = *wall_time;
  return j;
}

std::string analysis_csv(const Analysis& a) {
  const DepthReport& r = a.report;
  std::string out =
      "instance,formulation,max_degree,depth_lower,depth_upper,num_ancillas,"
      "num_subs,counted_max_degree,chromatic_index,solver_status\n";
  out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", csv_field(a.instance),
                     formulation_name(r.formulation), r.max_degree,
                     r.depth_lower, r.depth_upper, r.num_ancillas,
                     cell(r.num_subs), cell(a.counted_max_degree),
                     cell(r.chromatic_index), r.solver_status);
  return out;
}

std::string analysis_text(const Analysis& a) {
  const DepthReport& r = a.report;
  std::string out;
  out += fmt::format("instance       {}\n", a.instance.empty() ? "-" : a.instance);
  out += fmt::format("formulation    {}\n", formulation_name(r.formulation));
  out += fmt::format("max degree     {}\n", r.max_degree);
  out += fmt::format("depth          {} to {}\n", r.depth_lower, r.depth_upper);
  out += fmt::format("ancillas       {}\n", r.num_ancillas);
  if (r.num_subs) out += fmt::format("substitutions  {}\n", *r.num_subs);
  if (a.counted_max_degree && *a.counted_max_degree != r.max_degree) {
    out += fmt::format("counted degree {}\n", *a.counted_max_degree);
  }
  if (r.chromatic_index) {
    out += fmt::format("chromatic idx  {}{}\n", *r.chromatic_index,
                       a.chromatic_exact ? "" : " (greedy)");
    out += fmt::format("schedule depth {}\n", *r.schedule_depth);
  }
  out += fmt::format("status         {}\n", r.solver_status);
  out += "degrees       ";
  for (const auto& [v, d] : r.per_vertex_degrees) {
    out += fmt::format(" {}={}", v.name(), d);
  }
  out += "\n";
  return out;
}

Json inspect_json(const SatInstance& instance,
                  const std::vector<std::string>& warnings) {
  ExpansionSets sets = expansion_sets(instance);
  CoveringGraph cg = covering_graph(instance);
  std::set<std::array<int, 3>> distinct(sets.ES3.begin(), sets.ES3.end());
  Json j;
  j["kind"] = "inspect";
  j["instance"] = instance.source_name;
  j["num_vars"] = instance.num_vars;
  j["num_clauses"] = instance.clauses.size();
  j["num_used_vars"] = instance.used_variables().size();
  j["num_S"] = sets.S.size();
  j["num_P"] = sets.P.size();
  j["p_norm"] = sets.p_norm(instance.num_vars);
  j["repeated_variable_sets"] = sets.ES3.size() - distinct.size();
  Json hist = Json::object();
  for (const auto& [d, count] : cg.left_degree_histogram()) {
    hist[std::to_string(d)] = count;
  }
  j["covering_degree_histogram"] = std::move(hist);
  Json s = Json::array();
  for (const auto& p : sets.S) s.push_back(p.name());
  j["S"] = std::move(s);
  Json p = Json::array();
  for (const auto& q : sets.P) p.push_back(q.name());
  j["P"] = std::move(p);
  j["warnings"] = warnings;
  return j;
}

std::string comparison_csv(const std::vector<ComparisonEntry>& rows,
                           std::size_t num_seeds) {
  bool timing = std::any_of(rows.begin(), rows.end(),
                            [](const auto& e) { return e.wall_time.has_value(); });
  std::string out =
      "instance,linear_depth,ip_depth,ip_subs,ip_status,ip_lower_bound,"
      "ip_graph_depth,greedy_depth_median,greedy_subs_median,seeds,"
      "budget_secs,error";
  out += timing ? ",wall_time\n" : "\n";
  for (const auto& e : rows) {
    const ComparisonRow& r = e.row;
    std::optional<std::string> status;
    if (r.ip_status) status = std::string(solve_status_name(*r.ip_status));
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}", csv_field(r.instance),
                       cell(r.linear_depth), cell(r.ip_depth), cell(r.ip_subs),
                       cell(status), cell(r.ip_lower_bound),
                       cell(r.ip_graph_depth), cell(r.greedy_depth_median),
                       cell(r.greedy_subs_median),
                       r.greedy.empty() ? std::size_t{0} : num_seeds,
                       cell(r.budget_secs), csv_field(e.error));
    out += timing ? fmt::format(",{}\n", cell(e.wall_time)) : "\n";
  }
  return out;
}

Json comparison_json(const std::vector<ComparisonEntry>& rows) {
  Json arr = Json::array();
  for (const auto& e : rows) {
    const ComparisonRow& r = e.row;
    Json j;
    j["instance"] = r.instance;
    if (r.linear_depth) j["linear_depth"] = *r.linear_depth;
    if (r.ip_depth) {
      j["ip"] = Json{{"depth", *r.ip_depth},
                     {"subs", *r.ip_subs},
                     {"status", solve_status_name(*r.ip_status)},
                     {"lower_bound", *r.ip_lower_bound},
                     {"graph_depth", *r.ip_graph_depth}};
    }
    if (!r.greedy.empty()) {
      Json runs = Json::array();
      for (const auto& g : r.greedy) {
        runs.push_back(Json{{"seed", g.seed}, {"depth", g.depth}, {"subs", g.subs}});
      }
      j["greedy"] = Json{{"depth_median", *r.greedy_depth_median},
                         {"subs_median", *r.greedy_subs_median},
                         {"runs", std::move(runs)}};
    }
    if (r.budget_secs) j["budget_secs"] = *r.budget_secs;
    if (!e.error.empty()) j["error"] = e.error;
    if (e.wall_time) j["wall_time"] = *e.wall_time;
    arr.push_back(std::move(j));
  }
  return Json{{"kind", "comparison"}, {"rows", std::move(arr)}};
}

Json schedule_json(const CircuitSchedule& s) {
  std::map<VarId, int> qubit;
  Json names = Json::array();
  for (std::size_t q = 0; q < s.qubits.size(); ++q) {
    qubit[s.qubits[q]] = static_cast<int>(q);
    names.push_back(s.qubits[q].name());
  }
  auto qubits_of = [&](const Monomial& m) {
    Json arr = Json::array();
    for (const auto& v : m.vars()) arr.push_back(qubit.at(v));
    return arr;
  };
  Json layers = Json::array();
  for (const auto& layer : s.cost_layers) {
    Json gates = Json::array();
    for (const auto& g : layer) {
      Json gate{{"qubits", qubits_of(g.support)},
                {"coefficient", to_string(g.coefficient)}};
      if (!g.merged.empty()) {
        Json merged = Json::array();
        for (const auto& [m, c] : g.merged) {
          merged.push_back(Json{{"qubits", qubits_of(m)}, {"coefficient", to_string(c)}});
        }
        gate["merged"] = std::move(merged);
      }
      gates.push_back(std::move(gate));
    }
    layers.push_back(std::move(gates));
  }
  Json mixer = Json::array();
  for (std::size_t q = 0; q < s.qubits.size(); ++q) mixer.push_back(q);
  return Json{{"kind", "schedule"},
              {"depth", s.depth()},
              {"qubits", std::move(names)},
              {"cost_layers", std::move(layers)},
              {"mixer_layer", std::move(mixer)},
              {"dropped_constant", to_string(s.dropped_constant)}};
}

std::string schedule_text(const CircuitSchedule& s) {
  std::string out = fmt::format("depth {} ({} cost layers + mixer)\n", s.depth(),
                                s.cost_layers.size());
  for (std::size_t k = 0; k < s.cost_layers.size(); ++k) {
    out += fmt::format("layer {}:", k + 1);
    for (const auto& g : s.cost_layers[k]) {
      out += fmt::format(" [{} {}", g.support.to_string(), to_string(g.coefficient));
      for (const auto& [m, c] : g.merged) {
        out += fmt::format("; {} {}", m.to_string(), to_string(c));
      }
      out += "]";
    }
    out += "\n";
  }
  out += "mixer:";
  for (const auto& v : s.qubits) out += " " + v.name();
  out += "\n";
  return out;
}

std::string histogram_csv(const DepthReport& report, bool substitutions) {
  VarKind kind = substitutions ? VarKind::kSubstitution : VarKind::kProblem;
  std::map<int, int> counts;
  for (const auto& [v, d] : report.per_vertex_degrees) {
    if (v.kind() == kind) ++counts[d];
  }
  std::string out = "degree,count\n";
  for (const auto& [d, n] : counts) out += fmt::format("{},{}\n", d, n);
  return out;
}

}  // namespace qdepth
