#include <algorithm>
#include <limits>
#include <queue>

#include "tokgraph/error.hpp"
#include "tokgraph/invariants.hpp"

namespace tokgraph {

namespace {

constexpr int kUnmatched = -1;

class HopcroftKarp {
 public:
  HopcroftKarp(const Graph& g, const std::vector<int>& side) : g_(g), side_(side) {
    const auto n = static_cast<std::size_t>(g.order());
    mate_.assign(n, kUnmatched);
    layer_.assign(n, 0);
    for (int v = 0; v < g.order(); ++v) {
      if (side[static_cast<std::size_t>(v)] == 0) left_.push_back(v);
    }
  }

  Matching run() {
    while (bfs()) {
      for (int u : left_) {
        if (mate_[static_cast<std::size_t>(u)] == kUnmatched) dfs(u);
      }
    }
    Matching out;
    for (int u : left_) {
      const int v = mate_[static_cast<std::size_t>(u)];
      if (v != kUnmatched) out.emplace_back(u, v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  // Layers alternate from free left vertices; true if a free right vertex is reached.
  bool bfs() {
    std::queue<int> q;
    for (int u : left_) {
      if (mate_[static_cast<std::size_t>(u)] == kUnmatched) {
        layer_[static_cast<std::size_t>(u)] = 0;
        q.push(u);
      } else {
        layer_[static_cast<std::size_t>(u)] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g_.neighbors(u)) {
        const int w = mate_[static_cast<std::size_t>(v)];
        if (w == kUnmatched) {
          found = true;
        } else if (layer_[static_cast<std::size_t>(w)] == kInf) {
          layer_[static_cast<std::size_t>(w)] = layer_[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : g_.neighbors(u)) {
      const int w = mate_[static_cast<std::size_t>(v)];
      if (w == kUnmatched ||
          (layer_[static_cast<std::size_t>(w)] == layer_[static_cast<std::size_t>(u)] + 1 && dfs(w))) {
        mate_[static_cast<std::size_t>(u)] = v;
        mate_[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    layer_[static_cast<std::size_t>(u)] = kInf;
    return false;
  }

  const Graph& g_;
  const std::vector<int>& side_;
  std::vector<int> left_;
  std::vector<int> mate_;
  std::vector<int> layer_;
};

// Edmonds' algorithm: grow alternating trees by BFS and shrink odd cycles
// (blossoms) into their base vertex.
class Blossom {
 public:
  explicit Blossom(const Graph& g) : g_(g), n_(g.order()) {
    const auto n = static_cast<std::size_t>(n_);
    mate_.assign(n, kUnmatched);
    parent_.assign(n, kUnmatched);
    base_.assign(n, 0);
    used_.assign(n, false);
    in_blossom_.assign(n, false);
    for (int v = 0; v < n_; ++v) adj_.push_back(g.neighbors(v));
  }

  Matching run() {
    for (int v = 0; v < n_; ++v) {
      if (mate_[idx(v)] != kUnmatched) continue;
      const int end = find_path(v);
      for (int w = end; w != kUnmatched;) {
        const int pw = parent_[idx(w)];
        const int next = mate_[idx(pw)];
        mate_[idx(w)] = pw;
        mate_[idx(pw)] = w;
        w = next;
      }
    }
    Matching out;
    for (int v = 0; v < n_; ++v) {
      if (mate_[idx(v)] > v) out.emplace_back(v, mate_[idx(v)]);
    }
    return out;
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  int lca(int a, int b) {
    std::vector<bool> seen(idx(n_), false);
    for (;;) {
      a = base_[idx(a)];
      seen[idx(a)] = true;
      if (mate_[idx(a)] == kUnmatched) break;
      a = parent_[idx(mate_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(mate_[idx(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = true;
      in_blossom_[idx(base_[idx(mate_[idx(v)])])] = true;
      parent_[idx(v)] = child;
      child = mate_[idx(v)];
      v = parent_[idx(mate_[idx(v)])];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kUnmatched);
    for (int v = 0; v < n_; ++v) base_[idx(v)] = v;
    used_[idx(root)] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[idx(v)]) {
        if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
        if (to == root || (mate_[idx(to)] != kUnmatched && parent_[idx(mate_[idx(to)])] != kUnmatched)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = cur;
              if (!used_[idx(i)]) {
                used_[idx(i)] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[idx(to)] == kUnmatched) {
          parent_[idx(to)] = v;
          if (mate_[idx(to)] == kUnmatched) return to;
          used_[idx(mate_[idx(to)])] = true;
          q.push(mate_[idx(to)]);
        }
      }
    }
    return kUnmatched;
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

Matching maximum_matching_bipartite(const Graph& g, const std::vector<int>& side) {
  if (side.size() != static_cast<std::size_t>(g.order())) {
    throw Error(ErrorCode::kDomain, "side vector does not cover every vertex");
  }
  for (const auto& e : g.edges()) {
    if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)]) {
      throw Error(ErrorCode::kDomain, "side vector is not a proper 2-coloring");
    }
  }
  return HopcroftKarp(g, side).run();
}

Matching maximum_matching_general(const Graph& g) {
  auto m = Blossom(g).run();
  std::sort(m.begin(), m.end());
  return m;
}

int matching_number(const Graph& g) {
  auto bip = is_bipartite(g);
  if (bip.bipartite) return static_cast<int>(maximum_matching_bipartite(g, bip.side).size());
  return static_cast<int>(maximum_matching_general(g).size());
}

bool is_matching(const Graph& g, const Matching& m) {
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (const auto& e : m) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v)) return false;
    if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) return false;
    used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = true;
  }
  return true;
}

}  // namespace tokgraph
