#include "tokgraph/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>

#include <json.hpp>

#include "tokgraph/error.hpp"

namespace tokgraph {

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int v : g.neighbors(comp[head])) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

std::optional<int> diameter(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::kDomain, "diameter of the empty graph");
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

BipartiteResult is_bipartite(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> depth(n, -1);
  std::vector<int> parent(n, -1);
  for (int s = 0; s < g.order(); ++s) {
    if (depth[static_cast<std::size_t>(s)] >= 0) continue;
    depth[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (depth[static_cast<std::size_t>(v)] < 0) {
          depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          q.push(v);
        } else if ((depth[static_cast<std::size_t>(v)] - depth[static_cast<std::size_t>(u)]) % 2 == 0) {
          // Same parity: climb both tree paths to their meeting point.
          std::vector<int> up_u{u};
          std::vector<int> up_v{v};
          int a = u;
          int b = v;
          while (a != b) {
            if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
              a = parent[static_cast<std::size_t>(a)];
              up_u.push_back(a);
            } else {
              b = parent[static_cast<std::size_t>(b)];
              up_v.push_back(b);
            }
          }
          up_v.pop_back();
          BipartiteResult r;
          r.odd_cycle = std::move(up_u);
          r.odd_cycle.insert(r.odd_cycle.end(), up_v.rbegin(), up_v.rend());
          return r;
        }
      }
    }
  }
  BipartiteResult r;
  r.bipartite = true;
  r.side.reserve(n);
  for (int d : depth) r.side.push_back(d % 2);
  return r;
}

bool triangle_free(const Graph& g) {
  for (const auto& e : g.edges()) {
    auto ru = g.row(e.u);
    auto rv = g.row(e.v);
    for (std::size_t w = 0; w < ru.size(); ++w) {
      if (ru[w] & rv[w]) return false;
    }
  }
  return true;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

int first_bit(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    if (b[w]) return static_cast<int>(w * 64 + std::countr_zero(b[w]));
  }
  return -1;
}

void reset(Bits& b, int v) { b[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g), words_(g.words_per_row()) {}

  std::vector<int> run() {
    Bits all(words_, 0);
    for (int v = 0; v < g_.order(); ++v) all[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
    if (g_.order() > 0) expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy sequential coloring of the candidates, lowest id first.
  void color_order(const Bits& candidates, std::vector<int>& order, std::vector<int>& bound) const {
    Bits uncolored = candidates;
    int color = 0;
    while (any(uncolored)) {
      ++color;
      Bits q = uncolored;
      while (any(q)) {
        const int v = first_bit(q);
        reset(q, v);
        reset(uncolored, v);
        auto row = g_.row(v);
        for (std::size_t w = 0; w < words_; ++w) q[w] &= ~row[w];
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  void expand(Bits candidates) {
    std::vector<int> order;
    std::vector<int> bound;
    color_order(candidates, order, bound);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current_.size() + static_cast<std::size_t>(bound[idx]) <= best_.size()) return;
      const int v = order[idx];
      current_.push_back(v);
      Bits next(words_);
      auto row = g_.row(v);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & row[w];
      if (any(next)) {
        expand(std::move(next));
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      reset(candidates, v);
    }
  }

  const Graph& g_;
  std::size_t words_;
  std::vector<int> current_;
  std::vector<int> best_;
};

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

void require_nonempty(const Graph& g, const char* what) {
  if (g.order() == 0) throw Error(ErrorCode::kDomain, std::string(what) + " of the empty graph");
}

}  // namespace

std::vector<int> maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }

int clique_number(const Graph& g) {
  require_nonempty(g, "clique_number");
  return static_cast<int>(maximum_clique(g).size());
}

int independence_number_branch_and_bound(const Graph& g) {
  require_nonempty(g, "independence_number");
  return clique_number(complement(g));
}

int independence_number(const Graph& g) {
  require_nonempty(g, "independence_number");
  auto bip = is_bipartite(g);
  if (bip.bipartite) {
    return g.order() - static_cast<int>(maximum_matching_bipartite(g, bip.side).size());
  }
  return independence_number_branch_and_bound(g);
}

std::vector<int> dsatur_coloring(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> color(n, -1);
  std::vector<std::vector<bool>> seen(n);
  std::vector<int> saturation(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < g.order(); ++v) {
      const auto sv = static_cast<std::size_t>(v);
      if (color[sv] >= 0) continue;
      if (pick < 0) {
        pick = v;
        continue;
      }
      const auto sp = static_cast<std::size_t>(pick);
      if (saturation[sv] > saturation[sp] ||
          (saturation[sv] == saturation[sp] && g.degree(v) > g.degree(pick))) {
        pick = v;
      }
    }
    const auto sp = static_cast<std::size_t>(pick);
    int c = 0;
    while (c < static_cast<int>(seen[sp].size()) && seen[sp][static_cast<std::size_t>(c)]) ++c;
    color[sp] = c;
    for (int w : g.neighbors(pick)) {
      auto& sw = seen[static_cast<std::size_t>(w)];
      if (sw.size() <= static_cast<std::size_t>(c)) sw.resize(static_cast<std::size_t>(c) + 1, false);
      if (!sw[static_cast<std::size_t>(c)]) {
        sw[static_cast<std::size_t>(c)] = true;
        ++saturation[static_cast<std::size_t>(w)];
      }
    }
  }
  return color;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k)
      : g_(g), k_(k), color_(static_cast<std::size_t>(g.order()), -1),
        uses_(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(k), 0),
        saturation_(static_cast<std::size_t>(g.order()), 0) {
    for (int v = 0; v < g.order(); ++v) neighbors_.push_back(g.neighbors(v));
  }

  bool run() { return assign(0, 0); }

 private:
  int& uses(int v, int c) {
    return uses_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
  }

  bool assign(int colored, int used_colors) {
    if (colored == g_.order()) return true;
    int pick = -1;
    for (int v = 0; v < g_.order(); ++v) {
      const auto sv = static_cast<std::size_t>(v);
      if (color_[sv] >= 0) continue;
      if (pick < 0 || saturation_[sv] > saturation_[static_cast<std::size_t>(pick)] ||
          (saturation_[sv] == saturation_[static_cast<std::size_t>(pick)] &&
           neighbors_[sv].size() > neighbors_[static_cast<std::size_t>(pick)].size())) {
        pick = v;
      }
    }
    // A fresh color is interchangeable with any other unused one.
    const int limit = std::min(k_, used_colors + 1);
    for (int c = 0; c < limit; ++c) {
      if (uses(pick, c) > 0) continue;
      color_[static_cast<std::size_t>(pick)] = c;
      for (int w : neighbors_[static_cast<std::size_t>(pick)]) {
        if (uses(w, c)++ == 0) ++saturation_[static_cast<std::size_t>(w)];
      }
      if (assign(colored + 1, std::max(used_colors, c + 1))) return true;
      for (int w : neighbors_[static_cast<std::size_t>(pick)]) {
        if (--uses(w, c) == 0) --saturation_[static_cast<std::size_t>(w)];
      }
      color_[static_cast<std::size_t>(pick)] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
  std::vector<int> uses_;
  std::vector<int> saturation_;
  std::vector<std::vector<int>> neighbors_;
};

}  // namespace

bool is_k_colorable(const Graph& g, int k) {
  if (g.order() == 0) return true;
  if (k <= 0) return false;
  return ColoringSearch(g, k).run();
}

int chromatic_number(const Graph& g) {
  require_nonempty(g, "chromatic_number");
  if (g.size() == 0) return 1;
  if (is_bipartite(g).bipartite) return 2;
  const auto greedy = dsatur_coloring(g);
  const int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
  for (int k = clique_number(g); k < upper; ++k) {
    if (is_k_colorable(g, k)) return k;
  }
  return upper;
}

InvariantReport full_report(const Graph& g, const SolverBudget& budget) {
  require_nonempty(g, "full_report");
  auto over = [&](const char* what, int cap) {
    return Error(ErrorCode::kResource, std::string(what) + ": order " + std::to_string(g.order()) +
                                           " exceeds budget " + std::to_string(cap));
  };
  if (g.order() > budget.max_vertices) throw over("full_report", budget.max_vertices);
  const bool hard_ok = g.order() <= budget.max_hard_vertices;

  InvariantReport r;
  r.order = g.order();
  r.size = g.size();
  r.components = static_cast<int>(connected_components(g).size());
  r.diameter = diameter(g);
  const auto bip = is_bipartite(g);
  r.bipartite = bip.bipartite;
  r.triangle_free = triangle_free(g);

  if (bip.bipartite) {
    const auto m = maximum_matching_bipartite(g, bip.side);
    r.alpha_prime = static_cast<int>(m.size());
    r.alpha = g.order() - r.alpha_prime;
    r.chi = g.size() == 0 ? 1 : 2;
  } else {
    r.alpha_prime = static_cast<int>(maximum_matching_general(g).size());
    if (!hard_ok) throw over("independence_number", budget.max_hard_vertices);
    r.alpha = independence_number_branch_and_bound(g);
    r.chi = chromatic_number(g);
  }
  if (r.triangle_free) {
    r.omega = g.size() == 0 ? 1 : 2;
  } else {
    if (!hard_ok) throw over("clique_number", budget.max_hard_vertices);
    r.omega = clique_number(g);
  }

  const bool consistent = r.omega <= r.chi && r.alpha * r.chi >= r.order &&
                          r.alpha_prime <= r.order / 2 && (!r.triangle_free || r.omega <= 2);
  if (!consistent) throw std::logic_error("invariant report failed its cross-field checks");
  return r;
}

std::string to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["components"] = r.components;
  if (r.diameter) {
    j["diameter"] = *r.diameter;
  } else {
    j["diameter"] = "inf";
  }
  j["chi"] = r.chi;
  j["omega"] = r.omega;
  j["alpha"] = r.alpha;
  j["alpha_prime"] = r.alpha_prime;
  j["triangle_free"] = r.triangle_free;
  j["bipartite"] = r.bipartite;
  return j.dump();
}

}  // namespace tokgraph
