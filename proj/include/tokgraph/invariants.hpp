#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tokgraph/graph.hpp"

namespace tokgraph {

/// Components in order of their smallest vertex; each list is sorted.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Largest finite distance over all pairs, or nullopt (infinite) when g is
/// disconnected. Throws kDomain on the empty graph.
std::optional<int> diameter(const Graph& g);

struct BipartiteResult {
  bool bipartite = false;
  /// Side (0/1) per vertex, valid when bipartite.
  std::vector<int> side;
  /// Closed odd walk v0 v1 ... v_{l-1} (v_{l-1} ~ v0) when not bipartite.
  std::vector<int> odd_cycle;
};

BipartiteResult is_bipartite(const Graph& g);

bool triangle_free(const Graph& g);

/// Maximum clique, branch and bound with a greedy-coloring bound.
std::vector<int> maximum_clique(const Graph& g);
int clique_number(const Graph& g);

/// α via the complement-clique search regardless of bipartiteness.
int independence_number_branch_and_bound(const Graph& g);
/// α; bipartite graphs use |V| minus a maximum matching.
int independence_number(const Graph& g);

using Matching = std::vector<Edge>;

/// Hopcroft-Karp on a 2-colored graph; side must be a proper 2-coloring.
Matching maximum_matching_bipartite(const Graph& g, const std::vector<int>& side);
/// Edmonds blossom contraction; any simple graph.
Matching maximum_matching_general(const Graph& g);
int matching_number(const Graph& g);

bool is_matching(const Graph& g, const Matching& m);

/// Greedy DSATUR coloring (lowest id breaks ties); returns color per vertex.
std::vector<int> dsatur_coloring(const Graph& g);
/// Exact k-colorability by backtracking in saturation order.
bool is_k_colorable(const Graph& g, int k);
int chromatic_number(const Graph& g);

struct SolverBudget {
  int max_vertices = 200;
  /// Cap for χ, ω and α when no bipartite or triangle-free shortcut applies.
  int max_hard_vertices = 64;
};

struct InvariantReport {
  int order = 0;
  std::size_t size = 0;
  int components = 0;
  std::optional<int> diameter;
  int chi = 0;
  int omega = 0;
  int alpha = 0;
  int alpha_prime = 0;
  bool triangle_free = false;
  bool bipartite = false;
};

/// All invariants with cross-field consistency asserted before return.
/// Throws kResource naming the invariant that exceeds the budget.
InvariantReport full_report(const Graph& g, const SolverBudget& budget = {});

/// Stable JSON object with the report's field names; "inf" for an infinite
/// diameter.
std::string to_json(const InvariantReport& r);

}  // namespace tokgraph
