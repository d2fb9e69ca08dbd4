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

#include "qdepth/schedule.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <fmt/format.h>

#include "qdepth/error.hpp"

namespace qdepth {

namespace {

// Misra-Gries state over vertex indices.
class MisraGries {
 public:
  MisraGries(std::size_t n, int colors)
      : at_(n, std::vector<int>(colors, -1)), colors_(colors) {}

  void color(int u, int v) {
    std::vector<int> fan = maximal_fan(u, v);
    int c = free_color(u);
    int d = free_color(fan.back());
    if (c != d) invert_path(u, c, d);
    std::size_t w = 0;
    while (!(is_free(fan[w], d) && is_fan(u, fan, w))) {
      if (++w == fan.size()) throw std::logic_error("Misra-Gries: no fan end");
    }
    for (std::size_t j = 0; j < w; ++j) {
      int next = edge_color(u, fan[j + 1]);
      unset(u, fan[j + 1], next);
      set(u, fan[j], next);
    }
    set(u, fan[w], d);
  }

  int edge_color(int u, int w) const {
    for (int c = 0; c < colors_; ++c) {
      if (at_[u][c] == w) return c;
    }
    return -1;
  }

 private:
  bool is_free(int v, int c) const { return at_[v][c] < 0; }

  int free_color(int v) const {
    for (int c = 0; c < colors_; ++c) {
      if (is_free(v, c)) return c;
    }
    throw std::logic_error("Misra-Gries: vertex has no free color");
  }

  void set(int u, int v, int c) {
    at_[u][c] = v;
    at_[v][c] = u;
  }
  void unset(int u, int v, int c) {
    at_[u][c] = -1;
    at_[v][c] = -1;
  }

  // fan[0] = v; each further vertex is joined to u by an edge whose color is
  // free on its predecessor.
  std::vector<int> maximal_fan(int u, int v) const {
    std::vector<int> fan{v};
    std::vector<char> used(at_.size(), 0);
    used[v] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (int c = 0; c < colors_; ++c) {
        int w = at_[u][c];
        if (w < 0 || used[w] || !is_free(fan.back(), c)) continue;
        fan.push_back(w);
        used[w] = 1;
        grew = true;
        break;
      }
    }
    return fan;
  }

  bool is_fan(int u, const std::vector<int>& fan, std::size_t end) const {
    for (std::size_t j = 1; j <= end; ++j) {
      int c = edge_color(u, fan[j]);
      if (c < 0 || !is_free(fan[j - 1], c)) return false;
    }
    return true;
  }

  // Swaps c and d along the path from u that starts with color d.
  void invert_path(int u, int c, int d) {
    std::vector<std::array<int, 3>> path;
    int x = u;
    int cur = d;
    while (at_[x][cur] >= 0) {
      int y = at_[x][cur];
      path.push_back({x, y, cur});
      x = y;
      cur = cur == d ? c : d;
    }
    for (const auto& [a, b, col] : path) unset(a, b, col);
    for (const auto& [a, b, col] : path) set(a, b, col == d ? c : d);
  }

  std::vector<std::vector<int>> at_;
  int colors_;
};

void finish(EdgeColoring& out) {
  out.num_colors = 0;
  for (const auto& [edge, c] : out.colors) {
    out.num_colors = std::max(out.num_colors, c + 1);
  }
}

std::vector<int> greedy_hypercolors(const InteractionGraph& g) {
  std::vector<int> color(g.num_edges(), -1);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::vector<char> taken;
    for (auto v : g.edge_vertices()[e]) {
      for (auto f : g.incidence()[v]) {
        if (color[f] < 0) continue;
        if (taken.size() <= static_cast<std::size_t>(color[f])) {
          taken.resize(color[f] + 1, 0);
        }
        taken[color[f]] = 1;
      }
    }
    int c = 0;
    while (c < static_cast<int>(taken.size()) && taken[c]) ++c;
    color[e] = c;
  }
  return color;
}

// Smallest coloring by backtracking; edges take colors up to one more than
// the largest used so far, which removes color permutations.
std::vector<int> exact_hypercolors(const InteractionGraph& g,
                                   std::vector<int> best) {
  const std::size_t m = g.num_edges();
  std::vector<std::vector<std::size_t>> conflicts(m);
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = 0; f < m; ++f) {
      if (e == f) continue;
      const auto& a = g.edge_vertices()[e];
      const auto& b = g.edge_vertices()[f];
      bool meet = std::any_of(a.begin(), a.end(), [&](std::size_t v) {
        return std::find(b.begin(), b.end(), v) != b.end();
      });
      if (meet) conflicts[e].push_back(f);
    }
  }
  int best_count = best.empty() ? 0 : *std::max_element(best.begin(), best.end()) + 1;
  int lower = static_cast<int>(g.max_degree());
  std::vector<int> color(m, -1);
  std::function<void(std::size_t, int)> dfs = [&](std::size_t e, int used) {
    if (best_count <= lower || used >= best_count) return;
    if (e == m) {
      best = color;
      best_count = used;
      return;
    }
    for (int c = 0; c <= used && c < best_count - 1; ++c) {
      bool clash = std::any_of(conflicts[e].begin(), conflicts[e].end(),
                               [&](std::size_t f) { return color[f] == c; });
      if (clash) continue;
      color[e] = c;
      dfs(e + 1, std::max(used, c + 1));
      color[e] = -1;
    }
  };
  dfs(0, 0);
  return best;
}

}  // namespace

EdgeColoring color_edges(const InteractionGraph& g) {
  if (!g.is_simple()) {
    throw Error(ErrorCode::kNotSimpleGraph,
                "edge coloring needs a graph without hyperedges");
  }
  EdgeColoring out;
  if (g.num_edges() == 0) return out;
  MisraGries mg(g.num_vertices(), static_cast<int>(g.max_degree()) + 1);
  for (const auto& ends : g.edge_vertices()) {
    mg.color(static_cast<int>(ends[0]), static_cast<int>(ends[1]));
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& ends = g.edge_vertices()[e];
    out.colors[g.edges()[e]] = mg.edge_color(static_cast<int>(ends[0]),
                                             static_cast<int>(ends[1]));
  }
  finish(out);
  return out;
}

EdgeColoring color_hyperedges(const InteractionGraph& g) {
  std::vector<int> color = greedy_hypercolors(g);
  if (g.num_edges() <= kExactColoringLimit) {
    color = exact_hypercolors(g, std::move(color));
  }
  EdgeColoring out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    out.colors[g.edges()[e]] = color[e];
  }
  finish(out);
  return out;
}

bool is_proper(const InteractionGraph& g, const EdgeColoring& coloring) {
  std::vector<int> color(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto it = coloring.colors.find(g.edges()[e]);
    if (it == coloring.colors.end() || it->second < 0) return false;
    color[e] = it->second;
  }
  for (const auto& incident : g.incidence()) {
    std::set<int> seen;
    for (auto e : incident) {
      if (!seen.insert(color[e]).second) return false;
    }
  }
  return true;
}

CircuitSchedule build_schedule(const Polynomial& p,
                               const EdgeColoring& coloring) {
  CircuitSchedule s;
  std::set<VarId> vars = p.variables();
  s.qubits.assign(vars.begin(), vars.end());

  std::map<Monomial, Gate> gates;
  std::vector<std::pair<VarId, Rational>> local;
  for (const auto& [mono, coeff] : p.terms()) {
    if (mono.empty()) {
      s.dropped_constant = coeff;
    } else if (mono.size() == 1) {
      local.emplace_back(mono.vars().front(), coeff);
    } else if (coloring.colors.contains(mono)) {
      Gate& g = gates[mono];
      g.support = mono;
      g.coefficient = coeff;
    } else {
      auto host = std::find_if(
          coloring.colors.begin(), coloring.colors.end(),
          [&](const auto& entry) { return entry.first.includes(mono); });
      if (host == coloring.colors.end()) {
        throw Error(ErrorCode::kImproperColoring,
                    fmt::format("term {} has no color", mono.to_string()));
      }
      Gate& g = gates[host->first];
      g.support = host->first;
      g.merged.emplace_back(mono, coeff);
    }
  }

  std::map<int, std::vector<Gate>> by_color;
  for (auto& [support, gate] : gates) {
    by_color[coloring.colors.at(support)].push_back(std::move(gate));
  }
  for (auto& [color, gates] : by_color) {
    std::set<VarId> busy;
    for (const auto& gate : gates) {
      for (const auto& v : gate.support.vars()) {
        if (!busy.insert(v).second) {
          throw Error(ErrorCode::kImproperColoring,
                      fmt::format("color {} uses {} twice", color, v.name()));
        }
      }
    }
    s.cost_layers.push_back(std::move(gates));
  }

  if (s.cost_layers.empty() && !local.empty()) s.cost_layers.emplace_back();
  for (const auto& [v, coeff] : local) {
    bool placed = false;
    for (auto& layer : s.cost_layers) {
      bool idle = std::none_of(layer.begin(), layer.end(), [&](const Gate& g) {
        return g.support.contains(v);
      });
      if (idle) {
        layer.push_back(Gate{Monomial{v}, coeff, {}});
        placed = true;
        break;
      }
    }
    if (!placed) {
      auto& layer = s.cost_layers.front();
      auto it = std::find_if(layer.begin(), layer.end(), [&](const Gate& g) {
        return g.support.contains(v);
      });
      it->merged.emplace_back(Monomial{v}, coeff);
    }
  }
  return s;
}

}  // namespace qdepth
