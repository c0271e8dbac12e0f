#include <gtest/gtest.h>

#include <string>

#include "tokgraph/brute_force.hpp"
#include "tokgraph/error.hpp"
#include "tokgraph/graph.hpp"
#include "tokgraph/invariants.hpp"
#include "tokgraph/random_graphs.hpp"
#include "tokgraph/staircase.hpp"
#include "tokgraph/token.hpp"

namespace tokgraph {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kIo;
}

Graph union_of(std::initializer_list<Graph> parts) {
  return disjoint_union(std::vector<Graph>(parts));
}

const Graph& path_and_triangle() {
  static const Graph g = token_graph(disjoint_union(path_graph(4), cycle_graph(3)), 3).graph();
  return g;
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(path_graph(5)).size(), 1u);
  EXPECT_EQ(connected_components(token_graph(union_of({path_graph(4), path_graph(4)}), 3).graph()).size(), 4u);
  EXPECT_EQ(connected_components(token_graph(union_of({path_graph(3), path_graph(3), path_graph(3)}), 3).graph()).size(),
            10u);
  const auto parts = connected_components(union_of({path_graph(2), complete_graph(1), path_graph(2)}));
  EXPECT_EQ(parts, (std::vector<std::vector<int>>{{0, 1}, {2}, {3, 4}}));
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(path_graph(5)), 4);
  EXPECT_EQ(diameter(staircase_graph(6).graph()), 9);
  EXPECT_EQ(diameter(union_of({path_graph(4), path_graph(4)})), std::nullopt);
  EXPECT_EQ(diameter(complete_graph(1)), 0);
  EXPECT_EQ(code_of([] { diameter(Graph{}); }), ErrorCode::kDomain);
}

TEST(Bipartite, Examples) {
  const auto cs5 = is_bipartite(staircase_graph(5).graph());
  EXPECT_TRUE(cs5.bipartite);
  EXPECT_EQ(cs5.side.size(), 10u);

  const Graph c5 = cycle_graph(5);
  const auto odd = is_bipartite(c5);
  EXPECT_FALSE(odd.bipartite);
  ASSERT_EQ(odd.odd_cycle.size(), 5u);
  for (std::size_t p = 0; p < odd.odd_cycle.size(); ++p)
    EXPECT_TRUE(c5.has_edge(odd.odd_cycle[p], odd.odd_cycle[(p + 1) % odd.odd_cycle.size()]));

  EXPECT_FALSE(is_bipartite(path_and_triangle()).bipartite);
}

TEST(Bipartite, OddCycleWitnessIsClosedWalk) {
  Rng rng(99);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(rng, 3 + t % 10, 0.35);
    const auto r = is_bipartite(g);
    if (r.bipartite) {
      for (const auto& e : g.edges()) ASSERT_NE(r.side[e.u], r.side[e.v]);
    } else {
      ASSERT_EQ(r.odd_cycle.size() % 2, 1u);
      for (std::size_t p = 0; p < r.odd_cycle.size(); ++p)
        ASSERT_TRUE(g.has_edge(r.odd_cycle[p], r.odd_cycle[(p + 1) % r.odd_cycle.size()]));
    }
  }
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_number(staircase_graph(7).graph()), 2);
  EXPECT_EQ(chromatic_number(complete_graph(1)), 1);
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_number(complete_graph(6)), 6);
  EXPECT_EQ(code_of([] { chromatic_number(Graph{}); }), ErrorCode::kDomain);
}

TEST(Clique, Examples) {
  EXPECT_EQ(clique_number(staircase_graph(8).graph()), 2);
  EXPECT_EQ(clique_number(complete_graph(5)), 5);
  EXPECT_EQ(clique_number(path_and_triangle()), 3);
  EXPECT_EQ(code_of([] { clique_number(Graph{}); }), ErrorCode::kDomain);
  const auto k = maximum_clique(path_and_triangle());
  ASSERT_EQ(k.size(), 3u);
  EXPECT_TRUE(path_and_triangle().has_edge(k[0], k[1]));
  EXPECT_TRUE(path_and_triangle().has_edge(k[1], k[2]));
  EXPECT_TRUE(path_and_triangle().has_edge(k[0], k[2]));
}

TEST(Independence, Examples) {
  EXPECT_EQ(independence_number(staircase_graph(6).graph()), 10);
  EXPECT_EQ(independence_number(staircase_graph(5).graph()), 6);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(independence_number(complete_graph(n)), 1);
  EXPECT_EQ(code_of([] { independence_number(Graph{}); }), ErrorCode::kDomain);
}

TEST(Matching, Examples) {
  EXPECT_EQ(matching_number(path_graph(4)), 2);
  EXPECT_EQ(matching_number(token_graph(path_graph(4), 3).graph()), 2);
  EXPECT_EQ(matching_number(token_graph(path_graph(6), 3).graph()), 10);
  EXPECT_EQ(matching_number(Graph{}), 0);
  EXPECT_EQ(matching_number(cycle_graph(5)), 2);
  EXPECT_EQ(matching_number(complete_graph(7)), 3);
}

TEST(Matching, WitnessesAreMatchings) {
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(rng, 2 + t % 14, 0.3);
    const auto m = maximum_matching_general(g);
    ASSERT_TRUE(is_matching(g, m));
    const auto bip = is_bipartite(g);
    if (bip.bipartite) {
      const auto mb = maximum_matching_bipartite(g, bip.side);
      ASSERT_TRUE(is_matching(g, mb));
      ASSERT_EQ(mb.size(), m.size());
    }
  }
  const Graph c3 = cycle_graph(3);
  EXPECT_EQ(code_of([&] { maximum_matching_bipartite(c3, {0, 1, 0}); }), ErrorCode::kDomain);
}

TEST(TriangleFree, Examples) {
  EXPECT_TRUE(triangle_free(staircase_graph(9).graph()));
  EXPECT_FALSE(triangle_free(complete_graph(3)));
  EXPECT_FALSE(triangle_free(path_and_triangle()));
  // {1,2,4}, {1,3,4}, {2,3,4} once the triangle is numbered first.
  const auto t = token_graph(disjoint_union(cycle_graph(3), path_graph(4)), 3);
  const int a = t.id_of(TokenVertex{{0, 1, 3}});
  const int b = t.id_of(TokenVertex{{0, 2, 3}});
  const int c = t.id_of(TokenVertex{{1, 2, 3}});
  EXPECT_TRUE(t.graph().has_edge(a, b));
  EXPECT_TRUE(t.graph().has_edge(b, c));
  EXPECT_TRUE(t.graph().has_edge(a, c));
}

TEST(Coloring, DsaturIsProper) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(rng, 1 + t % 15, 0.4);
    const auto color = dsatur_coloring(g);
    for (const auto& e : g.edges()) ASSERT_NE(color[e.u], color[e.v]);
  }
}

TEST(Report, SingleVertex) {
  const auto r = full_report(complete_graph(1));
  EXPECT_EQ(r.components, 1);
  EXPECT_EQ(r.diameter, 0);
  EXPECT_EQ(r.chi, 1);
  EXPECT_EQ(r.omega, 1);
  EXPECT_EQ(r.alpha, 1);
  EXPECT_EQ(r.alpha_prime, 0);
  EXPECT_TRUE(r.triangle_free);
}

TEST(Report, Staircase6) {
  const auto r = full_report(staircase_graph(6).graph());
  EXPECT_EQ(r.components, 1);
  EXPECT_EQ(r.diameter, 9);
  EXPECT_EQ(r.chi, 2);
  EXPECT_EQ(r.omega, 2);
  EXPECT_EQ(r.alpha, 10);
  EXPECT_EQ(r.alpha_prime, 10);
  EXPECT_TRUE(r.triangle_free);
  EXPECT_TRUE(r.bipartite);
  EXPECT_EQ(to_json(r),
            "{\"components\":1,\"diameter\":9,\"chi\":2,\"omega\":2,\"alpha\":10,\"alpha_prime\":10,"
            "\"triangle_free\":true,\"bipartite\":true}");
}

TEST(Report, DisconnectedTokenGraph) {
  const auto r = full_report(token_graph(disjoint_union(path_graph(4), path_graph(4)), 3).graph());
  EXPECT_EQ(r.components, 4);
  EXPECT_FALSE(r.diameter.has_value());
  EXPECT_NE(to_json(r).find("\"diameter\":\"inf\""), std::string::npos);
}

TEST(Report, Budgets) {
  SolverBudget tight;
  tight.max_vertices = 10;
  try {
    full_report(path_graph(11), tight);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResource);
  }
  SolverBudget hard;
  hard.max_hard_vertices = 8;
  EXPECT_NO_THROW(full_report(staircase_graph(6).graph(), hard));
  try {
    full_report(complete_graph(9), hard);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResource);
    EXPECT_NE(std::string(e.what()).find("independence_number"), std::string::npos) << e.what();
  }
}

TEST(Oracles, SolversMatchExhaustiveSearch) {
  Rng rng(1234);
  std::uniform_int_distribution<int> order(1, 12);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_graph(rng, order(rng), density(rng));
    const int alpha = independence_number(g);
    ASSERT_EQ(alpha, brute_force::independence_number(g)) << t;
    ASSERT_EQ(independence_number_branch_and_bound(g), alpha) << t;
    const int omega = clique_number(g);
    ASSERT_EQ(omega, brute_force::clique_number(g)) << t;
    const int chi = chromatic_number(g);
    ASSERT_EQ(chi, brute_force::chromatic_number(g)) << t;
    const int nu = matching_number(g);
    ASSERT_EQ(nu, brute_force::matching_number(g)) << t;
    ASSERT_EQ(static_cast<int>(maximum_matching_general(g).size()), nu) << t;
    EXPECT_LE(omega, chi);
    EXPECT_LE(2 * nu, g.order());
    if (is_bipartite(g).bipartite) {
      EXPECT_EQ(alpha + nu, g.order()) << t;
    }
  }
}

TEST(Oracles, KoenigOnStaircases) {
  for (int n = 4; n <= 10; ++n) {
    const Graph g = staircase_graph(n).graph();
    EXPECT_EQ(independence_number(g) + matching_number(g), g.order()) << n;
  }
}

}  // namespace
}  // namespace tokgraph
