#include "tokgraph/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "tokgraph/error.hpp"

namespace tokgraph {

namespace {

// Accumulates summands into one disjoint union, remembering the token each
// new vertex represents.
class RhsBuilder {
 public:
  RhsBuilder(const std::vector<Graph>& parts, int k) {
    out_.k = k;
    int offset = 0;
    for (const auto& g : parts) {
      out_.part_sizes.push_back(g.order());
      offsets_.push_back(offset);
      offset += g.order();
    }
  }

  int offset(std::size_t part) const { return offsets_[part]; }

  template <typename TokenOf>
  void add(const Graph& summand, std::string name, TokenOf token_of) {
    if (summand.order() == 0) return;
    const int index = static_cast<int>(out_.summand_names.size());
    out_.summand_names.push_back(std::move(name));
    for (int v = 0; v < summand.order(); ++v) {
      std::vector<int> ids = token_of(v);
      std::sort(ids.begin(), ids.end());
      out_.tokens.push_back(TokenVertex{std::move(ids)});
      out_.summand.push_back(index);
    }
    out_.graph = disjoint_union(out_.graph, summand);
  }

  LabeledTokenGraph finish() && {
    std::vector<std::string> labels;
    labels.reserve(out_.tokens.size());
    for (const auto& t : out_.tokens) labels.push_back(to_string(t));
    out_.graph = out_.graph.with_labels(std::move(labels));
    return std::move(out_);
  }

 private:
  LabeledTokenGraph out_;
  std::vector<int> offsets_;
};

std::string name_of(std::size_t i) { return "G" + std::to_string(i + 1); }

// Γ_k(G) or the empty graph when G has fewer than k vertices.
Graph token_or_empty(const Graph& g, int k) {
  if (g.order() < k) return Graph{};
  return TokenGraph(g, k).graph();
}

void add_token_summand(RhsBuilder& b, const Graph& g, std::size_t part, int k) {
  const Graph t = token_or_empty(g, k);
  const int off = b.offset(part);
  const int n = g.order();
  b.add(t, "T" + std::to_string(k) + "(" + name_of(part) + ")", [&](int v) {
    auto s = unrank_subset(static_cast<std::uint64_t>(v), n, k);
    for (int& x : s.members) x += off;
    return s.members;
  });
}

// Γ2(G_i) □ G_j: vertex ({u,v}, x) at id rank({u,v}) * |G_j| + x.
void add_pair_times_vertex(RhsBuilder& b, const std::vector<Graph>& gs, std::size_t i, std::size_t j) {
  const Graph t = token_or_empty(gs[i], 2);
  const Graph prod = cartesian_product(t, gs[j]);
  const int m = gs[j].order();
  const int ni = gs[i].order();
  const int oi = b.offset(i);
  const int oj = b.offset(j);
  b.add(prod, "T2(" + name_of(i) + ")x" + name_of(j), [&](int v) {
    auto s = unrank_subset(static_cast<std::uint64_t>(v / m), ni, 2);
    return std::vector<int>{s.members[0] + oi, s.members[1] + oi, v % m + oj};
  });
}

}  // namespace

LabeledTokenGraph rhs_theorem2(const Graph& g, const Graph& h) {
  const std::vector<Graph> parts{g, h};
  RhsBuilder b(parts, 3);
  add_token_summand(b, g, 0, 3);
  add_token_summand(b, h, 1, 3);
  add_pair_times_vertex(b, parts, 0, 1);
  add_pair_times_vertex(b, parts, 1, 0);
  return std::move(b).finish();
}

LabeledTokenGraph rhs_2token_union(const std::vector<Graph>& graphs) {
  RhsBuilder b(graphs, 2);
  for (std::size_t i = 0; i < graphs.size(); ++i) add_token_summand(b, graphs[i], i, 2);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      const int m = graphs[j].order();
      const int oi = b.offset(i);
      const int oj = b.offset(j);
      b.add(cartesian_product(graphs[i], graphs[j]), name_of(i) + "x" + name_of(j),
            [&](int v) { return std::vector<int>{v / m + oi, v % m + oj}; });
    }
  }
  return std::move(b).finish();
}

LabeledTokenGraph rhs_theorem3(const std::vector<Graph>& graphs) {
  if (graphs.size() < 2) {
    throw Error(ErrorCode::kArity, "decomposition needs at least two graphs, got " + std::to_string(graphs.size()));
  }
  RhsBuilder b(graphs, 3);
  for (std::size_t i = 0; i < graphs.size(); ++i) add_token_summand(b, graphs[i], i, 3);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = 0; j < graphs.size(); ++j) {
      if (i != j) add_pair_times_vertex(b, graphs, i, j);
    }
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      for (std::size_t l = j + 1; l < graphs.size(); ++l) {
        const Graph prod = cartesian_product(cartesian_product(graphs[i], graphs[j]), graphs[l]);
        const int mj = graphs[j].order();
        const int ml = graphs[l].order();
        const int oi = b.offset(i);
        const int oj = b.offset(j);
        const int ol = b.offset(l);
        b.add(prod, name_of(i) + "x" + name_of(j) + "x" + name_of(l), [&](int v) {
          return std::vector<int>{v / (mj * ml) + oi, (v / ml) % mj + oj, v % ml + ol};
        });
      }
    }
  }
  return std::move(b).finish();
}

std::string part_class(const TokenVertex& s, const std::vector<int>& part_sizes) {
  std::vector<int> profile(part_sizes.size(), 0);
  for (int x : s.members) {
    int start = 0;
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
      if (x < start + part_sizes[p]) {
        ++profile[p];
        break;
      }
      start += part_sizes[p];
    }
  }
  if (part_sizes.size() == 2 && s.k() == 3) {
    static const std::map<std::pair<int, int>, std::string> kTags{
        {{3, 0}, "W1"}, {{0, 3}, "W2"}, {{1, 2}, "W3"}, {{2, 1}, "W4"}};
    return kTags.at({profile[0], profile[1]});
  }
  std::string tag = "(";
  for (std::size_t p = 0; p < profile.size(); ++p) {
    if (p > 0) tag.push_back(',');
    tag += std::to_string(profile[p]);
  }
  return tag + ")";
}

DecompositionReport verify_decomposition(const TokenGraph& lhs, const LabeledTokenGraph& rhs, std::string instance) {
  const int base_n = lhs.base().order();
  const int parts_total = std::accumulate(rhs.part_sizes.begin(), rhs.part_sizes.end(), 0);
  if (parts_total != base_n || rhs.k != lhs.k()) {
    throw Error(ErrorCode::kStructural, "right-hand side is over a different base or token count");
  }
  DecompositionReport r;
  r.instance = std::move(instance);
  r.lhs_vertices = lhs.order();
  r.lhs_edges = lhs.graph().size();
  r.rhs_vertices = rhs.graph.order();
  r.rhs_edges = rhs.graph.size();

  // lhs id -> rhs id through the shared token labels.
  std::vector<int> to_rhs(static_cast<std::size_t>(lhs.order()), -1);
  if (rhs.tokens.size() != static_cast<std::size_t>(rhs.graph.order())) {
    throw Error(ErrorCode::kStructural, "rhs token list does not cover its vertices");
  }
  for (int v = 0; v < rhs.graph.order(); ++v) {
    const auto& t = rhs.tokens[static_cast<std::size_t>(v)];
    if (rhs.graph.has_labels() && rhs.graph.label(v) != to_string(t)) {
      throw Error(ErrorCode::kStructural, "rhs vertex " + std::to_string(v + 1) + " is labeled " +
                                              rhs.graph.label(v) + " but stands for " + to_string(t));
    }
    if (t.k() != lhs.k() || !t.valid_for(base_n)) {
      throw Error(ErrorCode::kStructural, "rhs vertex " + to_string(t) + " is not a token vertex of the lhs");
    }
    auto& slot = to_rhs[rank_subset(t)];
    if (slot >= 0) throw Error(ErrorCode::kStructural, "rhs vertex " + to_string(t) + " appears twice");
    slot = v;
  }
  for (int u = 0; u < lhs.order(); ++u) {
    if (to_rhs[static_cast<std::size_t>(u)] < 0) {
      throw Error(ErrorCode::kStructural, "lhs vertex " + to_string(lhs.vertex(u)) + " missing from rhs");
    }
  }

  std::vector<std::string> cls(static_cast<std::size_t>(lhs.order()));
  std::map<std::string, ClassCheck> by_tag;
  for (int u = 0; u < lhs.order(); ++u) {
    cls[static_cast<std::size_t>(u)] = part_class(lhs.vertex(u), rhs.part_sizes);
    auto& c = by_tag[cls[static_cast<std::size_t>(u)]];
    c.tag = cls[static_cast<std::size_t>(u)];
    c.edges_equal = true;
    ++c.vertices;
  }

  constexpr std::size_t kMaxListed = 8;
  auto edge_name = [&](int a, int b) { return to_string(lhs.vertex(a)) + "-" + to_string(lhs.vertex(b)); };
  for (const auto& e : lhs.graph().edges()) {
    const auto& cu = cls[static_cast<std::size_t>(e.u)];
    if (cu != cls[static_cast<std::size_t>(e.v)]) ++r.cross_class_edges;
    if (!rhs.graph.has_edge(to_rhs[static_cast<std::size_t>(e.u)], to_rhs[static_cast<std::size_t>(e.v)])) {
      by_tag[cu].edges_equal = false;
      if (r.missing_in_rhs.size() < kMaxListed) r.missing_in_rhs.push_back(edge_name(e.u, e.v));
    }
  }
  std::vector<int> to_lhs(static_cast<std::size_t>(rhs.graph.order()));
  for (int u = 0; u < lhs.order(); ++u) to_lhs[static_cast<std::size_t>(to_rhs[static_cast<std::size_t>(u)])] = u;
  for (const auto& e : rhs.graph.edges()) {
    const int a = to_lhs[static_cast<std::size_t>(e.u)];
    const int b = to_lhs[static_cast<std::size_t>(e.v)];
    if (!lhs.graph().has_edge(a, b)) {
      by_tag[cls[static_cast<std::size_t>(a)]].edges_equal = false;
      if (cls[static_cast<std::size_t>(a)] != cls[static_cast<std::size_t>(b)]) {
        by_tag[cls[static_cast<std::size_t>(b)]].edges_equal = false;
      }
      if (r.missing_in_lhs.size() < kMaxListed) r.missing_in_lhs.push_back(edge_name(a, b));
    }
  }

  for (auto& [tag, c] : by_tag) r.classes.push_back(c);
  const bool classes_ok = std::all_of(r.classes.begin(), r.classes.end(), [](const ClassCheck& c) { return c.edges_equal; });
  r.verdict = classes_ok && r.cross_class_edges == 0 && r.lhs_vertices == r.rhs_vertices &&
              r.lhs_edges == r.rhs_edges && r.missing_in_rhs.empty() && r.missing_in_lhs.empty();
  return r;
}

std::string to_json(const DecompositionReport& r) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["lhs"] = {{"vertices", r.lhs_vertices}, {"edges", r.lhs_edges}};
  j["rhs"] = {{"vertices", r.rhs_vertices}, {"edges", r.rhs_edges}};
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"tag", c.tag}, {"vertices", c.vertices}, {"edges_equal", c.edges_equal}});
  }
  j["classes"] = classes;
  j["cross_class_edges"] = r.cross_class_edges;
  j["missing_in_rhs"] = r.missing_in_rhs;
  j["missing_in_lhs"] = r.missing_in_lhs;
  j["verdict"] = r.verdict;
  return j.dump();
}

long long components_formula(int n) {
  if (n < 2) throw Error(ErrorCode::kDomain, "component formula needs n >= 2");
  return static_cast<long long>(n) * n + static_cast<long long>(binomial(n, 3));
}

}  // namespace tokgraph
