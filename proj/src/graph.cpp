#include "tokgraph/graph.hpp"

#include <bit>
#include <utility>

#include "tokgraph/error.hpp"

namespace tokgraph {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidSize: return "invalid-size";
    case ErrorCode::kInvalidK: return "invalid-k";
    case ErrorCode::kIndex: return "index";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kResource: return "resource";
    case ErrorCode::kStructural: return "structural";
    case ErrorCode::kArity: return "arity";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

namespace {

void check_vertex(int n, int u) {
  if (u < 0 || u >= n) {
    throw Error(ErrorCode::kIndex, "vertex " + std::to_string(u) +
                                       " out of range for order " +
                                       std::to_string(n));
  }
}

}  // namespace

bool Graph::has_edge(int u, int v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  return (row(u)[v >> 6] >> (v & 63)) & 1U;
}

int Graph::degree(int u) const {
  check_vertex(n_, u);
  int d = 0;
  for (auto w : row(u)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int u) const {
  check_vertex(n_, u);
  std::vector<int> out;
  auto r = row(u);
  for (std::size_t w = 0; w < r.size(); ++w) {
    for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
    }
  }
  return out;
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(int u) const {
  check_vertex(n_, u);
  if (labels_.empty()) return std::to_string(u + 1);
  return labels_[static_cast<std::size_t>(u)];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_)) {
    throw Error(ErrorCode::kInvalidSize, "label count does not match order");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (!has_edge(u, v)) {
    throw Error(ErrorCode::kDomain, "no edge to remove");
  }
  Graph g = *this;
  g.clear_bit(u, v);
  g.clear_bit(v, u);
  --g.edge_count_;
  return g;
}

Graph Graph::with_edge(int u, int v) const {
  if (u == v) throw Error(ErrorCode::kDomain, "self-loop");
  if (has_edge(u, v)) return *this;
  Graph g = *this;
  g.set_bit(u, v);
  g.set_bit(v, u);
  ++g.edge_count_;
  return g;
}

bool Graph::same_adjacency(const Graph& other) const {
  return n_ == other.n_ && bits_ == other.bits_;
}

void Graph::set_bit(int u, int v) {
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |=
      std::uint64_t{1} << (v & 63);
}

void Graph::clear_bit(int u, int v) {
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &=
      ~(std::uint64_t{1} << (v & 63));
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidSize, "negative vertex count");
  graph_.n_ = n;
  graph_.words_ = (static_cast<std::size_t>(n) + 63) / 64;
  graph_.bits_.assign(graph_.words_ * static_cast<std::size_t>(n), 0);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_vertex(graph_.n_, u);
  check_vertex(graph_.n_, v);
  if (u == v) {
    throw Error(ErrorCode::kDomain,
                "self-loop at vertex " + std::to_string(u));
  }
  if (!((graph_.row(u)[v >> 6] >> (v & 63)) & 1U)) {
    graph_.set_bit(u, v);
    graph_.set_bit(v, u);
    ++graph_.edge_count_;
  }
  return *this;
}

GraphBuilder& GraphBuilder::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() &&
      labels.size() != static_cast<std::size_t>(graph_.n_)) {
    throw Error(ErrorCode::kInvalidSize, "label count does not match order");
  }
  graph_.labels_ = std::move(labels);
  return *this;
}

Graph GraphBuilder::build() && { return std::move(graph_); }
Graph GraphBuilder::build() const& { return graph_; }

Graph empty_graph(int n) { return GraphBuilder(n).build(); }

Graph path_graph(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidSize, "path needs n >= 1");
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidSize, "cycle needs n >= 3");
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  b.add_edge(0, n - 1);
  return std::move(b).build();
}

Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidSize, "complete graph needs n >= 1");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph star_graph(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidSize, "star needs n >= 1");
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph from_edges(int n, const EdgeList& edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() == 0) return h;
  if (h.order() == 0) return g;
  const int shift = g.order();
  GraphBuilder b(g.order() + h.order());
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
  for (const auto& e : h.edges()) b.add_edge(e.u + shift, e.v + shift);
  if (g.has_labels() || h.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(g.order() + h.order()));
    for (int u = 0; u < g.order(); ++u) labels.push_back(g.label(u));
    for (int u = 0; u < h.order(); ++u) labels.push_back(h.label(u));
    b.set_labels(std::move(labels));
  }
  Graph out = std::move(b).build();
  out.blocks_ = g.blocks_;
  for (int off : h.blocks_) out.blocks_.push_back(off + shift);
  return out;
}

Graph disjoint_union(std::span<const Graph> graphs) {
  Graph acc;
  for (const auto& g : graphs) acc = disjoint_union(acc, g);
  return acc;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int m = h.order();
  GraphBuilder b(g.order() * m);
  for (int a = 0; a < g.order(); ++a) {
    for (const auto& e : h.edges()) b.add_edge(a * m + e.u, a * m + e.v);
  }
  for (const auto& e : g.edges()) {
    for (int x = 0; x < m; ++x) b.add_edge(e.u * m + x, e.v * m + x);
  }
  return std::move(b).build();
}

}  // namespace tokgraph
