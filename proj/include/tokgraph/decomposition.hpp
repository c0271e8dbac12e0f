#pragma once

#include <string>
#include <vector>

#include "tokgraph/graph.hpp"
#include "tokgraph/token.hpp"

namespace tokgraph {

/// A right-hand side built from summand graphs, with every vertex identified
/// with the token vertex (subset of the union's base ids) it stands for.
struct LabeledTokenGraph {
  Graph graph;
  int k = 0;
  /// Orders of the base graphs G_1..G_m; the union's ids are laid out in
  /// this order.
  std::vector<int> part_sizes;
  std::vector<TokenVertex> tokens;
  /// Index into summand_names per vertex.
  std::vector<int> summand;
  std::vector<std::string> summand_names;
};

/// Γ3(G) ⊕ Γ3(H) ⊕ (Γ2(G) □ H) ⊕ (Γ2(H) □ G) with canonical labels:
/// ({u,v}, x) of Γ2(G) □ H is {u, v, |G|+x}; ({p,q}, a) of Γ2(H) □ G is
/// {a, |G|+p, |G|+q}.
LabeledTokenGraph rhs_theorem2(const Graph& g, const Graph& h);

/// Γ2 of a disjoint union: ⊕ Γ2(G_i) ⊕ ⊕_{i<j} (G_i □ G_j).
LabeledTokenGraph rhs_2token_union(const std::vector<Graph>& graphs);

/// ⊕ Γ3(G_i) ⊕ ⊕_{i≠j} (Γ2(G_i) □ G_j) ⊕ ⊕_{i<j<k} (G_i □ G_j □ G_k).
/// Throws kArity for fewer than two graphs.
LabeledTokenGraph rhs_theorem3(const std::vector<Graph>& graphs);

/// Class of a token vertex: how many of its members fall in each part.
/// For two parts the tags are W1 (3,0), W2 (0,3), W3 (1,2), W4 (2,1).
std::string part_class(const TokenVertex& s, const std::vector<int>& part_sizes);

struct ClassCheck {
  std::string tag;
  int vertices = 0;
  bool edges_equal = false;
};

struct DecompositionReport {
  std::string instance;
  int lhs_vertices = 0;
  std::size_t lhs_edges = 0;
  int rhs_vertices = 0;
  std::size_t rhs_edges = 0;
  std::vector<ClassCheck> classes;
  /// lhs edges whose endpoints lie in different classes; must be zero.
  std::size_t cross_class_edges = 0;
  /// First few edges present on one side only, as "{a,b,c}-{d,e,f}".
  std::vector<std::string> missing_in_rhs;
  std::vector<std::string> missing_in_lhs;
  bool verdict = false;
};

/// Compares Γ_k(⊕ G_i) with a labeled right-hand side as labeled graphs.
/// Throws kStructural naming the first vertex label present on one side only.
DecompositionReport verify_decomposition(const TokenGraph& lhs, const LabeledTokenGraph& rhs,
                                         std::string instance = {});

std::string to_json(const DecompositionReport& r);

/// n² + C(n,3), the component count of Γ3 of n connected graphs with at
/// least three vertices each.
long long components_formula(int n);

}  // namespace tokgraph
