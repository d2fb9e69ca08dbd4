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

// Branch and bound for the min-max-degree cover.
//
// Phase 1 raises a degree bound D from a root lower bound until a cover with
// every degree <= D exists; phase 2 minimizes substitutions at that D.
//
// Row values under a partial assignment, for a variable a:
//   cur(a) = |P_a| + sum_{used pairs q containing a} w_q + #clauses with a free
// with w_q = 4 - [q in P]. An unassigned clause containing a adds at least
// min(1, w_q / k_q) for its pairs q containing a (k_q = unassigned clauses
// offering q), or nothing if one of those pairs is already used. Summing
// these gives lb(a) <= final row value. A pair row is 5 + #clauses using it.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "qdepth/optimize.hpp"

namespace qdepth {

namespace {

constexpr double kEps = 1e-9;

struct Option {
  int pair = 0;
  int free_var = 0;  // compact variable index
};

// The three coverings of one clause.
struct ClauseOptions {
  std::array<Option, 3> options;
};

struct Problem {
  std::vector<int> label;                  // compact var -> variable index
  std::vector<std::array<int, 2>> ends;    // pair -> compact vars
  std::vector<int> weight;                 // pair -> w
  std::vector<int> base;                   // var -> |P_a|
  std::vector<ClauseOptions> clauses;

  int num_vars() const { return static_cast<int>(label.size()); }
  int num_pairs() const { return static_cast<int>(ends.size()); }
};

Problem make_problem(const IpModel& model) {
  Problem pb;
  const SatInstance& inst = model.instance;
  std::map<int, int> compact;
  for (int v : inst.used_variables()) {
    compact[v] = static_cast<int>(pb.label.size());
    pb.label.push_back(v);
  }
  ExpansionSets sets = expansion_sets(inst);
  for (const auto& p : model.pairs) {
    pb.ends.push_back({compact.at(p.i), compact.at(p.j)});
    pb.weight.push_back(sets.P.contains(p) ? 3 : 4);
  }
  pb.base.resize(pb.label.size());
  for (int a = 0; a < pb.num_vars(); ++a) {
    pb.base[a] = static_cast<int>(sets.P_for(pb.label[a]).size());
  }
  for (int c = 0; c < static_cast<int>(inst.clauses.size()); ++c) {
    ClauseOptions g;
    for (int k = 0; k < 3; ++k) {
      const auto& z = model.zvars[model.cover_rows[c][k]];
      g.options[k] = {z.pair, compact.at(z.covering.free_var)};
    }
    pb.clauses.push_back(g);
  }
  return pb;
}

enum class Outcome { kFound, kExhausted, kAborted };

class Search {
 public:
  using Clock = std::chrono::steady_clock;

  Search(const Problem& pb, std::optional<Clock::time_point> deadline)
      : pb_(pb),
        deadline_(deadline),
        choice_(pb.clauses.size(), -1),
        used_(pb.num_pairs(), 0),
        open_(pb.num_pairs(), 0),
        cur_(pb.base),
        lb_(pb.num_vars()),
        pair_cost_(pb.num_pairs()) {
    for (const auto& g : pb.clauses) {
      for (const auto& opt : g.options) ++open_[opt.pair];
    }
  }

  // Lower bound on the optimal max degree with nothing assigned.
  int root_bound() {
    compute_bounds();
    int bound = pb_.clauses.empty() ? 0 : 6;
    for (double v : lb_) {
      bound = std::max(bound, static_cast<int>(std::ceil(v - kEps)));
    }
    return bound;
  }

  // Any cover with every degree <= limit.
  Outcome find_feasible(int limit) {
    limit_ = limit;
    minimize_subs_ = false;
    return dfs();
  }

  // Covers with every degree <= limit and fewer than best_subs pairs;
  // best() holds the last one found.
  Outcome minimize_subs(int limit, int best_subs) {
    limit_ = limit;
    minimize_subs_ = true;
    best_subs_ = best_subs;
    found_any_ = false;
    Outcome r = dfs();
    if (r == Outcome::kAborted) return r;
    return found_any_ ? Outcome::kFound : Outcome::kExhausted;
  }

  const std::vector<int>& best() const { return best_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  struct Candidate {
    int option = 0;
    double worst = 0;
    bool reuses = false;
    int open = 0;
  };

  void apply(int g, int k) {
    choice_[g] = k;
    const Option& opt = pb_.clauses[g].options[k];
    if (used_[opt.pair]++ == 0) {
      ++num_used_;
      for (int a : pb_.ends[opt.pair]) cur_[a] += pb_.weight[opt.pair];
    }
    ++cur_[opt.free_var];
    for (const auto& o : pb_.clauses[g].options) --open_[o.pair];
  }

  void undo(int g) {
    const Option& opt = pb_.clauses[g].options[choice_[g]];
    if (--used_[opt.pair] == 0) {
      --num_used_;
      for (int a : pb_.ends[opt.pair]) cur_[a] -= pb_.weight[opt.pair];
    }
    --cur_[opt.free_var];
    for (const auto& o : pb_.clauses[g].options) ++open_[o.pair];
    choice_[g] = -1;
  }

  // Contribution of unassigned clause g to lb(a), where a is in the clause.
  double cost(int g, int a) const {
    double best = 1.0;
    for (const auto& opt : pb_.clauses[g].options) {
      if (opt.free_var == a) continue;  // this option's pair contains a
      if (used_[opt.pair] > 0) return 0.0;
      best = std::min(best, static_cast<double>(pb_.weight[opt.pair]) /
                                open_[opt.pair]);
    }
    return best;
  }

  void compute_bounds() {
    for (int a = 0; a < pb_.num_vars(); ++a) lb_[a] = cur_[a];
    std::fill(pair_cost_.begin(), pair_cost_.end(), std::array<double, 2>{});
    for (int g = 0; g < static_cast<int>(pb_.clauses.size()); ++g) {
      if (choice_[g] >= 0) continue;
      for (const auto& opt : pb_.clauses[g].options) {
        // opt.free_var is a clause member; charge it once here.
        int a = opt.free_var;
        double c = cost(g, a);
        lb_[a] += c;
        for (const auto& o : pb_.clauses[g].options) {
          if (o.free_var == a) continue;
          pair_cost_[o.pair][side(o.pair, a)] += c;
        }
      }
    }
  }

  int side(int pair, int a) const { return pb_.ends[pair][0] == a ? 0 : 1; }

  bool fits(double v) const { return v <= limit_ + kEps; }

  // Largest lower bound among the vertices the option touches, or infinity
  // when it breaks the limit.
  double evaluate(int g, const Option& opt) const {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    if (used_[opt.pair] + 6 > limit_) return kInf;
    double worst = lb_[opt.free_var] - cost(g, opt.free_var) + 1;
    for (int s = 0; s < 2; ++s) {
      int a = pb_.ends[opt.pair][s];
      double v = used_[opt.pair] > 0
                     ? lb_[a] - cost(g, a)
                     : lb_[a] + pb_.weight[opt.pair] - pair_cost_[opt.pair][s];
      worst = std::max(worst, v);
    }
    return fits(worst) ? worst : kInf;
  }

  // Unassigned clauses with no reusable pair and pairwise disjoint options
  // each need a new pair.
  int extra_subs_bound(const std::vector<std::vector<Candidate>>& cands) {
    std::vector<char> taken(pb_.num_pairs(), 0);
    int extra = 0;
    for (int g = 0; g < static_cast<int>(pb_.clauses.size()); ++g) {
      if (choice_[g] >= 0) continue;
      const auto& list = cands[g];
      bool independent = std::none_of(list.begin(), list.end(), [&](const Candidate& c) {
        int p = pb_.clauses[g].options[c.option].pair;
        return used_[p] > 0 || taken[p];
      });
      if (!independent) continue;
      ++extra;
      for (const auto& c : list) taken[pb_.clauses[g].options[c.option].pair] = 1;
    }
    return extra;
  }

  bool out_of_time() {
    if (!deadline_ || (++nodes_ & 1023) != 0) return aborted_;
    if (Clock::now() > *deadline_) aborted_ = true;
    return aborted_;
  }

  Outcome dfs() {
    if (out_of_time()) return Outcome::kAborted;
    compute_bounds();
    for (double v : lb_) {
      if (!fits(v)) return Outcome::kExhausted;
    }

    int pick = -1;
    std::vector<std::vector<Candidate>> cands(pb_.clauses.size());
    for (int g = 0; g < static_cast<int>(pb_.clauses.size()); ++g) {
      if (choice_[g] >= 0) continue;
      for (int k = 0; k < 3; ++k) {
        const Option& opt = pb_.clauses[g].options[k];
        double worst = evaluate(g, opt);
        if (std::isinf(worst)) continue;
        cands[g].push_back({k, worst, used_[opt.pair] > 0, open_[opt.pair]});
      }
      if (cands[g].empty()) return Outcome::kExhausted;
      if (pick < 0 || cands[g].size() < cands[pick].size()) pick = g;
    }

    if (pick < 0) {
      if (minimize_subs_) {
        if (num_used_ >= best_subs_) return Outcome::kExhausted;
        best_subs_ = num_used_;
        found_any_ = true;
      }
      best_ = choice_;
      return Outcome::kFound;
    }
    if (minimize_subs_ && num_used_ + extra_subs_bound(cands) >= best_subs_) {
      return Outcome::kExhausted;
    }

    auto& list = cands[pick];
    std::sort(list.begin(), list.end(), [](const Candidate& x, const Candidate& y) {
      if (x.reuses != y.reuses) return x.reuses;
      if (x.open != y.open) return x.open > y.open;
      if (x.worst != y.worst) return x.worst < y.worst;
      return x.option < y.option;
    });
    for (const auto& c : list) {
      apply(pick, c.option);
      Outcome r = dfs();
      undo(pick);
      if (r == Outcome::kAborted) return r;
      if (r == Outcome::kFound && !minimize_subs_) return r;
      if (minimize_subs_ && num_used_ >= best_subs_) break;
    }
    return Outcome::kExhausted;
  }

  const Problem& pb_;
  std::optional<Clock::time_point> deadline_;
  std::vector<int> choice_;
  std::vector<int> used_;
  std::vector<int> open_;
  std::vector<int> cur_;
  std::vector<double> lb_;
  std::vector<std::array<double, 2>> pair_cost_;
  int num_used_ = 0;
  int limit_ = 0;
  bool minimize_subs_ = false;
  int best_subs_ = 0;
  bool found_any_ = false;
  bool aborted_ = false;
  std::int64_t nodes_ = 0;
  std::vector<int> best_;
};

CoverAssignment to_cover(const IpModel& model,
                         const std::vector<int>& choice) {
  std::vector<Covering> coverings(choice.size());
  for (std::size_t c = 0; c < choice.size(); ++c) {
    coverings[c] = model.zvars[model.cover_rows[c][choice[c]]].covering;
  }
  return CoverAssignment(model.instance, std::move(coverings));
}

}  // namespace

std::string_view solve_status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kFeasibleBound: return "feasible-bound";
    case SolveStatus::kTimedOut: return "timed-out";
  }
  return "unknown";
}

IpSolution solve_ip_exact(const IpModel& model, const SolveOptions& options) {
  using Clock = std::chrono::steady_clock;
  std::optional<Clock::time_point> deadline;
  if (options.budget) {
    deadline = Clock::now() +
               std::chrono::duration_cast<Clock::duration>(*options.budget);
  }
  const SatInstance& inst = model.instance;
  Problem pb = make_problem(model);

  CoverAssignment incumbent =
      options.incumbent ? *options.incumbent : greedy_cover(inst, 0).cover;
  incumbent.validate(inst);
  CoverScore inc_score = score_cover(inst, incumbent);

  Search search(pb, deadline);
  IpSolution sol;
  sol.lower_bound = std::min(search.root_bound(), inc_score.max_degree);

  auto finish = [&](SolveStatus status) {
    sol.cover = incumbent;
    CoverScore s = score_cover(inst, incumbent);
    sol.max_degree = s.max_degree;
    sol.num_subs = s.num_subs;
    sol.graph_max_degree = gvs_degree_table(inst, incumbent).max_degree;
    sol.objective_value = Rational(s.max_degree) + model.penalty * s.num_subs;
    sol.status = status;
    sol.nodes = search.nodes();
    return sol;
  };

  int limit = sol.lower_bound;
  for (; limit < inc_score.max_degree; ++limit) {
    Outcome r = search.find_feasible(limit);
    if (r == Outcome::kAborted) {
      sol.lower_bound = limit;
      return finish(SolveStatus::kTimedOut);
    }
    if (r == Outcome::kFound) {
      incumbent = to_cover(model, search.best());
      break;
    }
  }
  sol.lower_bound = limit;

  Outcome r = search.minimize_subs(limit, score_cover(inst, incumbent).num_subs);
  if (r == Outcome::kFound || r == Outcome::kAborted) {
    if (!search.best().empty()) {
      CoverAssignment candidate = to_cover(model, search.best());
      if (score_cover(inst, candidate) < score_cover(inst, incumbent)) {
        incumbent = std::move(candidate);
      }
    }
  }
  return finish(r == Outcome::kAborted ? SolveStatus::kFeasibleBound
                                       : SolveStatus::kOptimal);
}

}  // namespace qdepth
