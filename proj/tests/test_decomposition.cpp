#include <gtest/gtest.h>

#include <string>

#include "tokgraph/decomposition.hpp"
#include "tokgraph/error.hpp"
#include "tokgraph/graph.hpp"
#include "tokgraph/invariants.hpp"
#include "tokgraph/random_graphs.hpp"
#include "tokgraph/token.hpp"

namespace tokgraph {
namespace {

std::vector<Graph> pool() {
  return {path_graph(3), path_graph(4), path_graph(5), cycle_graph(3), cycle_graph(4), complete_graph(3), complete_graph(4)};
}

DecompositionReport check_pair(const Graph& g, const Graph& h) {
  return verify_decomposition(token_graph(disjoint_union(g, h), 3), rhs_theorem2(g, h));
}

DecompositionReport check_list(const std::vector<Graph>& parts) {
  return verify_decomposition(token_graph(disjoint_union(parts), 3), rhs_theorem3(parts));
}

TEST(TwoGraphUnion, TwoPaths) {
  const auto rhs = rhs_theorem2(path_graph(4), path_graph(4));
  EXPECT_EQ(rhs.graph.order(), 56);
  ASSERT_EQ(rhs.summand_names.size(), 4u);
  std::vector<int> sizes(rhs.summand_names.size(), 0);
  for (int s : rhs.summand) ++sizes[static_cast<std::size_t>(s)];
  EXPECT_EQ(sizes, (std::vector<int>{4, 4, 24, 24}));

  const auto report = check_pair(path_graph(4), path_graph(4));
  EXPECT_TRUE(report.verdict);
  EXPECT_EQ(report.lhs_vertices, 56);
  EXPECT_EQ(report.lhs_edges, 90u);
  EXPECT_EQ(report.rhs_edges, 90u);
  EXPECT_EQ(report.cross_class_edges, 0u);
  ASSERT_EQ(report.classes.size(), 4u);
  EXPECT_EQ(report.classes[0].tag, "W1");
  EXPECT_EQ(report.classes[3].tag, "W4");
  for (const auto& c : report.classes) EXPECT_TRUE(c.edges_equal) << c.tag;
}

TEST(TwoGraphUnion, SmallSummandIsEmpty) {
  const auto rhs = rhs_theorem2(path_graph(2), path_graph(4));
  EXPECT_EQ(rhs.summand_names, (std::vector<std::string>{"T3(G2)", "T2(G1)xG2", "T2(G2)xG1"}));
  EXPECT_EQ(rhs.graph.order(), 20);
  EXPECT_TRUE(check_pair(path_graph(2), path_graph(4)).verdict);
  EXPECT_TRUE(check_pair(complete_graph(1), path_graph(2)).verdict);
}

TEST(TwoGraphUnion, PathAndTriangle) {
  const auto report = check_pair(path_graph(4), cycle_graph(3));
  EXPECT_TRUE(report.verdict);
  EXPECT_EQ(report.lhs_vertices, 35);
  EXPECT_EQ(report.lhs_edges, 60u);
}

TEST(TwoGraphUnion, AllPoolPairs) {
  for (const auto& g : pool())
    for (const auto& h : pool()) EXPECT_TRUE(check_pair(g, h).verdict);
}

TEST(TwoGraphUnion, RandomConnectedPairs) {
  Rng rng(42);
  std::uniform_int_distribution<int> size(1, 5);
  for (int t = 0; t < 50; ++t) {
    const int a = size(rng);
    int b = size(rng);
    while (a + b < 3) b = size(rng);
    const Graph g = random_connected_graph(rng, a, 0.3);
    const Graph h = random_connected_graph(rng, b, 0.3);
    EXPECT_TRUE(check_pair(g, h).verdict) << t;
  }
}

TEST(TwoGraphUnion, CorruptedRightHandSideIsCaught) {
  auto rhs = rhs_theorem2(path_graph(4), path_graph(4));
  const auto e = rhs.graph.edges().front();
  const std::string a = rhs.graph.label(e.u);
  const std::string b = rhs.graph.label(e.v);
  rhs.graph = rhs.graph.without_edge(e.u, e.v);
  const auto report = verify_decomposition(token_graph(disjoint_union(path_graph(4), path_graph(4)), 3), rhs);
  EXPECT_FALSE(report.verdict);
  ASSERT_EQ(report.missing_in_rhs.size(), 1u);
  EXPECT_NE(report.missing_in_rhs[0].find(a), std::string::npos);
  EXPECT_NE(report.missing_in_rhs[0].find(b), std::string::npos);
  EXPECT_TRUE(report.missing_in_lhs.empty());
  EXPECT_NE(to_json(report).find("\"verdict\":false"), std::string::npos);
}

TEST(TwoGraphUnion, LabelMismatchIsStructural) {
  auto rhs = rhs_theorem2(path_graph(4), path_graph(4));
  auto labels = rhs.graph.labels();
  labels[0] = "{9,9,9}";
  rhs.graph = rhs.graph.with_labels(labels);
  try {
    verify_decomposition(token_graph(disjoint_union(path_graph(4), path_graph(4)), 3), rhs);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStructural);
  }

  auto twice = rhs_theorem2(path_graph(4), path_graph(4));
  twice.tokens[1] = twice.tokens[0];
  twice.graph = twice.graph.with_labels({});
  try {
    verify_decomposition(token_graph(disjoint_union(path_graph(4), path_graph(4)), 3), twice);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStructural);
    EXPECT_NE(std::string(e.what()).find("twice"), std::string::npos);
  }
}

TEST(PartClass, Tags) {
  const std::vector<int> parts{4, 3};
  EXPECT_EQ(part_class(TokenVertex{{0, 1, 2}}, parts), "W1");
  EXPECT_EQ(part_class(TokenVertex{{4, 5, 6}}, parts), "W2");
  EXPECT_EQ(part_class(TokenVertex{{0, 4, 5}}, parts), "W3");
  EXPECT_EQ(part_class(TokenVertex{{0, 1, 6}}, parts), "W4");
  EXPECT_EQ(part_class(TokenVertex{{0, 3, 6}}, {3, 3, 3}), "(1,1,1)");
}

TEST(TwoTokenUnion, SingleGraph) {
  const Graph g = cycle_graph(5);
  const auto rhs = rhs_2token_union({g});
  EXPECT_TRUE(rhs.graph.same_adjacency(token_graph(g, 2).graph()));
}

TEST(TwoTokenUnion, Examples) {
  const auto twice = rhs_2token_union({path_graph(3), path_graph(3)});
  EXPECT_EQ(twice.graph.order(), 15);
  EXPECT_TRUE(verify_decomposition(token_graph(disjoint_union(path_graph(3), path_graph(3)), 2), twice).verdict);

  const auto mixed = rhs_2token_union({path_graph(3), path_graph(4)});
  EXPECT_EQ(mixed.graph.order(), 21);
  std::vector<int> sizes(mixed.summand_names.size(), 0);
  for (int s : mixed.summand) ++sizes[static_cast<std::size_t>(s)];
  EXPECT_EQ(sizes, (std::vector<int>{3, 6, 12}));
  EXPECT_TRUE(verify_decomposition(token_graph(disjoint_union(path_graph(3), path_graph(4)), 2), mixed).verdict);

  const std::vector<Graph> three{path_graph(3), cycle_graph(4), complete_graph(2)};
  EXPECT_TRUE(verify_decomposition(token_graph(disjoint_union(three), 2), rhs_2token_union(three)).verdict);
}

TEST(ManyGraphUnion, TwoGraphsMatchPairRule) {
  const auto two = rhs_theorem3({path_graph(4), cycle_graph(3)});
  const auto direct = rhs_theorem2(path_graph(4), cycle_graph(3));
  EXPECT_TRUE(two.graph.same_adjacency(direct.graph));
  EXPECT_EQ(two.graph.labels(), direct.graph.labels());
}

TEST(ManyGraphUnion, ThreePaths) {
  const std::vector<Graph> parts{path_graph(3), path_graph(3), path_graph(3)};
  EXPECT_TRUE(check_list(parts).verdict);
  EXPECT_EQ(connected_components(rhs_theorem3(parts).graph).size(), 10u);
}

TEST(ManyGraphUnion, MixedTriple) {
  const auto report = check_list({path_graph(3), path_graph(4), cycle_graph(3)});
  EXPECT_TRUE(report.verdict);
  EXPECT_EQ(report.lhs_vertices, 120);
}

TEST(ManyGraphUnion, AllMultisets) {
  const std::vector<Graph> small{path_graph(3), path_graph(4), cycle_graph(3)};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a; b < 3; ++b)
      for (std::size_t c = b; c < 3; ++c) EXPECT_TRUE(check_list({small[a], small[b], small[c]}).verdict);
  EXPECT_TRUE(check_list({path_graph(3), cycle_graph(3), path_graph(3), complete_graph(3)}).verdict);
}

TEST(ManyGraphUnion, Arity) {
  try {
    rhs_theorem3({path_graph(4)});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArity);
  }
}

TEST(Components, Formula) {
  EXPECT_EQ(components_formula(2), 4);
  EXPECT_EQ(components_formula(3), 10);
  EXPECT_EQ(components_formula(4), 20);
  try {
    components_formula(1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
  }
}

TEST(Components, ConnectedSummands) {
  const std::vector<Graph> choices{path_graph(3), path_graph(4), cycle_graph(3), cycle_graph(4)};
  for (int n = 2; n <= 4; ++n) {
    for (std::size_t first = 0; first < choices.size(); ++first) {
      std::vector<Graph> parts;
      for (int i = 0; i < n; ++i) parts.push_back(choices[(first + static_cast<std::size_t>(i)) % choices.size()]);
      const auto count = connected_components(token_graph(disjoint_union(parts), 3).graph()).size();
      EXPECT_EQ(static_cast<long long>(count), components_formula(n)) << n;
    }
  }
}

TEST(Components, SmallSummandsBreakTheCount) {
  const std::vector<Graph> parts{complete_graph(1), path_graph(4)};
  const auto count = connected_components(token_graph(disjoint_union(parts), 3).graph()).size();
  EXPECT_NE(static_cast<long long>(count), components_formula(2));
}

}  // namespace
}  // namespace tokgraph
