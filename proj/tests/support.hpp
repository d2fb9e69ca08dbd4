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

// Shared fixtures and brute-force oracles for the test binaries.

#ifndef QDEPTH_TESTS_SUPPORT_HPP_
#define QDEPTH_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qdepth/cnf.hpp"
#include "qdepth/gvs.hpp"
#include "qdepth/pubo.hpp"

namespace qdepth::testing {

inline SatInstance make_instance(int num_vars,
                                 const std::vector<std::array<int, 3>>& rows) {
  SatInstance inst;
  inst.num_vars = num_vars;
  for (const auto& row : rows) {
    Clause c;
    for (int k = 0; k < 3; ++k) c.literals[k] = {std::abs(row[k]), row[k] < 0};
    inst.clauses.push_back(c);
  }
  return inst;
}

// (x1 | x2 | !x3) (x1 | x3 | x4) (!x2 | x4 | x5) (x1 | !x2 | x5)
inline SatInstance example1() {
  SatInstance inst =
      make_instance(5, {{{1, 2, -3}}, {{1, 3, 4}}, {{-2, 4, 5}}, {{1, -2, 5}}});
  inst.source_name = "example1.cnf";
  return inst;
}

inline std::string source_dir() { return QDEPTH_SOURCE_DIR; }

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Looks in $QDEPTH_SATLIB_DIR first, then data/satlib.
inline std::optional<std::filesystem::path> find_satlib(const std::string& name) {
  namespace fs = std::filesystem;
  if (const char* dir = std::getenv("QDEPTH_SATLIB_DIR"); dir && *dir) {
    if (fs::exists(fs::path(dir) / name)) return fs::path(dir) / name;
  }
  fs::path bundled = fs::path(source_dir()) / "data" / "satlib" / name;
  if (fs::exists(bundled)) return bundled;
  return std::nullopt;
}

inline SatInstance load_instance(const std::filesystem::path& path) {
  return parse_dimacs(read_file(path), {}, path.filename().string()).instance;
}

inline SatInstance random_instance(std::mt19937_64& rng, int num_vars,
                                   int num_clauses) {
  SatInstance inst;
  inst.num_vars = num_vars;
  std::vector<int> vars(num_vars);
  std::iota(vars.begin(), vars.end(), 1);
  std::bernoulli_distribution sign(0.5);
  for (int c = 0; c < num_clauses; ++c) {
    std::shuffle(vars.begin(), vars.end(), rng);
    Clause clause;
    for (int k = 0; k < 3; ++k) clause.literals[k] = {vars[k], sign(rng)};
    inst.clauses.push_back(clause);
  }
  return inst;
}

// One uniformly random covering per clause.
inline CoverAssignment random_cover(const SatInstance& inst,
                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<Covering> choices;
  for (const auto& clause : inst.clauses) {
    auto v = clause.variables();
    int free_slot = pick(rng);
    std::vector<int> pair;
    for (int k = 0; k < 3; ++k) {
      if (k != free_slot) pair.push_back(v[k]);
    }
    choices.push_back({PairId::of(pair[0], pair[1]), v[free_slot]});
  }
  return CoverAssignment(inst, std::move(choices));
}

// Every cover of the instance, in lexicographic order of per-clause choices.
template <typename Fn>
void for_each_cover(const SatInstance& inst, Fn&& fn) {
  std::size_t n = inst.clauses.size();
  std::vector<int> slot(n, 0);
  while (true) {
    std::vector<Covering> choices;
    for (std::size_t c = 0; c < n; ++c) {
      auto v = inst.clauses[c].variables();
      std::vector<int> pair;
      for (int k = 0; k < 3; ++k) {
        if (k != slot[c]) pair.push_back(v[k]);
      }
      choices.push_back({PairId::of(pair[0], pair[1]), v[slot[c]]});
    }
    fn(CoverAssignment(inst, std::move(choices)));
    std::size_t k = 0;
    while (k < n && ++slot[k] == 3) slot[k++] = 0;
    if (k == n) return;
  }
}

inline bool satisfiable(const SatInstance& inst) {
  for (std::uint32_t mask = 0; mask < (1u << inst.num_vars); ++mask) {
    std::vector<int> values(inst.num_vars + 1, 0);
    for (int v = 1; v <= inst.num_vars; ++v) values[v] = (mask >> (v - 1)) & 1;
    bool all = true;
    for (const auto& c : inst.clauses) all = all && c.satisfied_by(values);
    if (all) return true;
  }
  return false;
}

// Exhaustive optimum of a polynomial over every 0/1 assignment of its
// variables. Problem variables are enumerated jointly; for each of their
// assignments the remaining variables split into independent blocks, each of
// which is enumerated on its own. The result is the exact optimum.
class BruteForce {
 public:
  explicit BruteForce(const Polynomial& p) {
    std::int64_t scale = 1;
    for (const auto& [m, c] : p.terms()) {
      scale = std::lcm(scale, c.denominator());
    }
    scale_ = scale;
    for (const auto& v : p.variables()) {
      if (v.kind() == VarKind::kProblem) xs_.push_back(v);
    }
    std::map<VarId, int> xpos;
    for (std::size_t k = 0; k < xs_.size(); ++k) xpos[xs_[k]] = static_cast<int>(k);

    // Union-find over the non-problem variables.
    std::vector<VarId> others;
    std::map<VarId, int> opos;
    for (const auto& v : p.variables()) {
      if (!xpos.contains(v)) {
        opos[v] = static_cast<int>(others.size());
        others.push_back(v);
      }
    }
    std::vector<int> parent(others.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (const auto& [m, c] : p.terms()) {
      int first = -1;
      for (const auto& v : m.vars()) {
        if (auto it = opos.find(v); it != opos.end()) {
          if (first < 0) {
            first = find(it->second);
          } else {
            parent[find(it->second)] = first;
          }
        }
      }
    }
    std::map<int, int> block_of_root;
    std::vector<int> block(others.size()), local(others.size());
    for (std::size_t k = 0; k < others.size(); ++k) {
      int root = find(static_cast<int>(k));
      auto [it, fresh] = block_of_root.emplace(root, static_cast<int>(blocks_.size()));
      if (fresh) blocks_.emplace_back();
      block[k] = it->second;
      local[k] = blocks_[it->second].size++;
    }
    for (const auto& [m, c] : p.terms()) {
      Term t;
      t.coeff = (c * Rational(scale)).numerator();
      int b = -1;
      for (const auto& v : m.vars()) {
        if (auto it = xpos.find(v); it != xpos.end()) {
          t.xmask |= std::uint64_t{1} << it->second;
        } else {
          int k = opos.at(v);
          b = block[k];
          t.omask |= std::uint64_t{1} << local[k];
        }
      }
      if (b < 0) {
        x_terms_.push_back(t);
      } else {
        blocks_[b].terms.push_back(t);
      }
    }
  }

  Rational minimum() const { return optimum(false).value; }
  Rational maximum() const { return optimum(true).value; }

  // Problem-variable assignments (bit k = xs()[k]) attaining the optimum.
  std::vector<std::uint64_t> minimizers() const { return optimum(false).argopt; }
  std::vector<std::uint64_t> maximizers() const { return optimum(true).argopt; }
  const std::vector<VarId>& xs() const { return xs_; }

 private:
  struct Term {
    std::uint64_t xmask = 0;
    std::uint64_t omask = 0;
    std::int64_t coeff = 0;
  };
  struct Block {
    int size = 0;
    std::vector<Term> terms;
  };
  struct Result {
    Rational value;
    std::vector<std::uint64_t> argopt;
  };

  Result optimum(bool maximize) const {
    auto better = [&](std::int64_t a, std::int64_t b) {
      return maximize ? a > b : a < b;
    };
    std::optional<std::int64_t> best;
    std::vector<std::uint64_t> arg;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << xs_.size()); ++x) {
      std::int64_t total = 0;
      for (const auto& t : x_terms_) {
        if ((x & t.xmask) == t.xmask) total += t.coeff;
      }
      for (const auto& b : blocks_) {
        std::optional<std::int64_t> inner;
        for (std::uint64_t o = 0; o < (std::uint64_t{1} << b.size); ++o) {
          std::int64_t s = 0;
          for (const auto& t : b.terms) {
            if ((x & t.xmask) == t.xmask && (o & t.omask) == t.omask) s += t.coeff;
          }
          if (!inner || better(s, *inner)) inner = s;
        }
        total += *inner;
      }
      if (!best || better(total, *best)) {
        best = total;
        arg.clear();
      }
      if (total == *best) arg.push_back(x);
    }
    return {Rational(best.value_or(0), scale_), std::move(arg)};
  }

  std::int64_t scale_ = 1;
  std::vector<VarId> xs_;
  std::vector<Term> x_terms_;
  std::vector<Block> blocks_;
};

// Two-variable supports of the product form of a clause: {a, b} appears iff
// the third literal is positive (its factor 1 - x has a constant term).
inline std::set<PairId> expansion_pairs(const SatInstance& inst) {
  std::set<PairId> out;
  for (const auto& c : inst.clauses) {
    for (int k = 0; k < 3; ++k) {
      if (c.literals[k].negated) continue;
      const auto& a = c.literals[(k + 1) % 3];
      const auto& b = c.literals[(k + 2) % 3];
      out.insert(PairId::of(a.var, b.var));
    }
  }
  return out;
}

// Literal model of the min-max cover IP: per-variable rows
//   sum_{s in S_a} (4 - [s in P]) y_s + |P_a| + #{c : free(c) = a}
// and per-pair rows 5 + #{c : pair(c) = s}, maximized; ties by pair count.
inline std::pair<int, int> ip_objective(const SatInstance& inst,
                                        const CoverAssignment& cover) {
  std::set<PairId> P = expansion_pairs(inst);
  std::set<PairId> used = cover.used_pairs();
  std::map<int, int> row;
  for (int v : inst.used_variables()) {
    for (const auto& p : P) row[v] += p.contains(v);
  }
  for (const auto& s : used) {
    row[s.i] += 4 - static_cast<int>(P.contains(s));
    row[s.j] += 4 - static_cast<int>(P.contains(s));
  }
  std::map<PairId, int> covered;
  for (const auto& choice : cover.choices()) {
    row[choice.free_var] += 1;
    covered[choice.pair] += 1;
  }
  int best = 0;
  for (const auto& [v, d] : row) best = std::max(best, d);
  for (const auto& [s, n] : covered) best = std::max(best, 5 + n);
  return {best, static_cast<int>(used.size())};
}

}  // namespace qdepth::testing

#endif  // QDEPTH_TESTS_SUPPORT_HPP_
