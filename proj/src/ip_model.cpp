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
#include <cmath>

#include <fmt/format.h>

#include "qdepth/optimize.hpp"

namespace qdepth {

int IpModel::pair_index(const PairId& p) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || *it != p) return -1;
  return static_cast<int>(it - pairs.begin());
}

IpModel build_ip(const SatInstance& instance) {
  IpModel model;
  model.instance = instance;
  ExpansionSets sets = expansion_sets(instance);
  model.pairs.assign(sets.S.begin(), sets.S.end());
  const auto num_clauses = static_cast<std::int64_t>(instance.clauses.size());
  model.penalty = num_clauses == 0 ? Rational(0) : Rational(1, 10 * num_clauses);

  for (int c = 0; c < static_cast<int>(num_clauses); ++c) {
    std::array<int, 3> row{};
    for (int k = 0; k < 3; ++k) {
      const Covering& cov = sets.coverings[c][k];
      row[k] = static_cast<int>(model.zvars.size());
      model.zvars.push_back({c, cov, model.pair_index(cov.pair)});
    }
    model.cover_rows.push_back(row);
  }

  for (int a : instance.used_variables()) {
    IpModel::DegreeRow row;
    row.name = fmt::format("deg_v_{}", a);
    const auto& p_a = sets.P_for(a);
    row.constant = static_cast<int>(p_a.size());
    for (int s = 0; s < static_cast<int>(model.pairs.size()); ++s) {
      if (!model.pairs[s].contains(a)) continue;
      row.y.push_back({s, p_a.contains(model.pairs[s]) ? 3 : 4});
    }
    for (int z = 0; z < static_cast<int>(model.zvars.size()); ++z) {
      if (model.zvars[z].covering.free_var == a) row.z.push_back({z, 1});
    }
    model.vertex_rows.push_back(std::move(row));
  }

  for (int s = 0; s < static_cast<int>(model.pairs.size()); ++s) {
    IpModel::DegreeRow row;
    row.name = fmt::format("deg_s_{}_{}", model.pairs[s].i, model.pairs[s].j);
    row.constant = 5;
    for (int z = 0; z < static_cast<int>(model.zvars.size()); ++z) {
      if (model.zvars[z].pair == s) row.z.push_back({z, 1});
    }
    model.pair_rows.push_back(std::move(row));
  }
  return model;
}

namespace {

std::string y_name(const PairId& p) { return fmt::format("y_{}_{}", p.i, p.j); }

std::string z_name(const IpModel::ZVar& z) {
  return fmt::format("z_{}_{}_{}_{}", z.clause, z.covering.pair.i,
                     z.covering.pair.j, z.covering.free_var);
}

// Appends terms, wrapping long rows onto continuation lines.
class RowWriter {
 public:
  // `written` counts terms already on the row.
  explicit RowWriter(std::string& out, int written = 0)
      : out_(out), count_(written) {}

  void term(std::string_view coeff, std::string_view var) {
    std::string piece =
        count_ == 0 ? fmt::format("{}{}", coeff, var)
                    : fmt::format(" + {}{}", coeff, var);
    if (count_ > 0 && count_ % 8 == 0) out_ += "\n   ";
    out_ += piece;
    ++count_;
  }
  void raw(std::string_view text) { out_ += text; }
  int count() const { return count_; }

 private:
  std::string& out_;
  int count_;
};

std::string coeff_prefix(int c) {
  return c == 1 ? std::string() : fmt::format("{} ", c);
}

void write_degree_row(std::string& out, const IpModel& model,
                      const IpModel::DegreeRow& row) {
  out += fmt::format(" {}: ", row.name);
  RowWriter w(out);
  for (const auto& t : row.y) w.term(coeff_prefix(t.coeff), y_name(model.pairs[t.var]));
  for (const auto& t : row.z) w.term(coeff_prefix(t.coeff), z_name(model.zvars[t.var]));
  w.raw(w.count() == 0 ? "- obj" : " - obj");
  out += fmt::format(" <= {}\n", -row.constant);
}

}  // namespace

std::string export_lp(const IpModel& model) {
  std::string out;
  const auto& inst = model.instance;
  out += fmt::format("\\ min-max degree cover model{}{}\n",
                     inst.source_name.empty() ? "" : " for ", inst.source_name);
  out += fmt::format("\\ {} variables, {} clauses, {} candidate pairs\n",
                     inst.num_vars, inst.clauses.size(), model.pairs.size());
  if (model.penalty != Rational(0)) {
    out += fmt::format("\\ substitution penalty = {} exactly\n",
                       to_string(model.penalty));
  }
  out += "Minimize\n depth: obj";
  if (model.penalty != Rational(0)) {
    double pen = boost::rational_cast<double>(model.penalty);
    std::string coeff = fmt::format("{} ", pen);
    RowWriter w(out, 1);
    for (const auto& p : model.pairs) w.term(coeff, y_name(p));
  }
  out += "\nSubject To\n";
  for (const auto& row : model.vertex_rows) write_degree_row(out, model, row);
  for (const auto& row : model.pair_rows) write_degree_row(out, model, row);
  for (std::size_t c = 0; c < model.cover_rows.size(); ++c) {
    const auto& r = model.cover_rows[c];
    out += fmt::format(" cover_{}: {} + {} + {} = 1\n", c,
                       z_name(model.zvars[r[0]]), z_name(model.zvars[r[1]]),
                       z_name(model.zvars[r[2]]));
  }
  for (const auto& z : model.zvars) {
    const PairId& p = z.covering.pair;
    out += fmt::format(" link_{}_{}_{}: {} - {} <= 0\n", p.i, p.j, z.clause,
                       z_name(z), y_name(p));
  }
  out += "Bounds\n obj >= 0\n";
  if (!model.pairs.empty()) {
    out += "Binary\n";
    for (const auto& p : model.pairs) out += fmt::format(" {}\n", y_name(p));
    for (const auto& z : model.zvars) out += fmt::format(" {}\n", z_name(z));
  }
  out += "General\n obj\nEnd\n";
  return out;
}

}  // namespace qdepth
