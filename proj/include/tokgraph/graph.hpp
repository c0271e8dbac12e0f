#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tokgraph {

/// Unordered vertex pair stored as (min, max).
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of normalized edges.
using EdgeList = std::vector<Edge>;

class GraphBuilder;

/// Immutable finite simple undirected graph on the dense ids 0..n-1.
///
/// Adjacency is a bit matrix, one row of 64-bit words per vertex. A graph
/// may carry per-vertex display labels and the start offsets of the blocks
/// it was assembled from by disjoint_union.
class Graph {
 public:
  Graph() = default;

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edge_count_; }

  bool has_edge(int u, int v) const;
  int degree(int u) const;
  std::vector<int> neighbors(int u) const;
  EdgeList edges() const;

  /// Adjacency row of u; bit v of word v/64 is set iff uv is an edge.
  std::span<const std::uint64_t> row(int u) const {
    return {bits_.data() + static_cast<std::size_t>(u) * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Display label of u; falls back to the 1-based id.
  std::string label(int u) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// First vertex id of every block this graph was built from. A graph not
  /// produced by disjoint_union has the single block {0}.
  const std::vector<int>& block_offsets() const noexcept { return blocks_; }

  Graph with_labels(std::vector<std::string> labels) const;
  Graph without_edge(int u, int v) const;
  Graph with_edge(int u, int v) const;

  /// Same vertex count and same edge set; labels and blocks are ignored.
  bool same_adjacency(const Graph& other) const;

 private:
  friend class GraphBuilder;
  friend Graph disjoint_union(const Graph&, const Graph&);

  void set_bit(int u, int v);
  void clear_bit(int u, int v);

  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
  std::vector<int> blocks_{0};
};

/// Mutable staging area for a Graph. Duplicate edges are merged; loops and
/// out-of-range endpoints are rejected.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& set_labels(std::vector<std::string> labels);
  int order() const noexcept { return graph_.n_; }
  Graph build() &&;
  Graph build() const&;

 private:
  Graph graph_;
};

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);
Graph from_edges(int n, const EdgeList& edges);

/// G followed by H with H's ids shifted by |V(G)|. Block offsets of both
/// operands are kept, so an n-ary fold remembers every summand.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph disjoint_union(std::span<const Graph> graphs);

/// G □ H with vertex (a, x) at id a * |V(H)| + x.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace tokgraph
