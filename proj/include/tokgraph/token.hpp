#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tokgraph/graph.hpp"

namespace tokgraph {

/// A k-subset of base-graph vertex ids, strictly increasing.
struct TokenVertex {
  std::vector<int> members;

  int k() const noexcept { return static_cast<int>(members.size()); }
  bool valid_for(int n) const noexcept;

  friend auto operator<=>(const TokenVertex&, const TokenVertex&) = default;
};

/// "{a,b,c}" with 1-based members.
std::string to_string(const TokenVertex& s);

/// Sorts and validates arbitrary distinct ids into a TokenVertex.
TokenVertex make_token_vertex(std::vector<int> ids, int n);

/// C(n, k) as an unsigned 64-bit value; throws on overflow.
std::uint64_t binomial(int n, int k);

/// Colexicographic rank: sum over positions p of C(members[p], p + 1).
std::uint64_t rank_subset(const TokenVertex& s);
TokenVertex unrank_subset(std::uint64_t id, int n, int k);

/// Largest token graph the dense representation will build.
inline constexpr std::uint64_t kMaxTokenVertices = 20000;

/// Γ_k(G): vertices are the k-subsets of V(G) in colex order; two subsets are
/// adjacent when their symmetric difference is an edge of G.
class TokenGraph {
 public:
  TokenGraph(Graph base, int k);

  const Graph& base() const noexcept { return base_; }
  int k() const noexcept { return k_; }
  const Graph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }

  TokenVertex vertex(int id) const;
  int id_of(const TokenVertex& s) const;

 private:
  Graph base_;
  int k_;
  Graph graph_;
};

TokenGraph token_graph(const Graph& g, int k);

}  // namespace tokgraph
