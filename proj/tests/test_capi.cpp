#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "tokgraph/tokgraph.h"

namespace {

struct Handle {
  tg_graph* g = nullptr;
  ~Handle() { tg_graph_free(g); }
};

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  tg_string_free(s);
  return out;
}

TEST(CApi, Version) { EXPECT_STREQ(tg_version(), "0.1.0"); }

TEST(CApi, BuildAndQuery) {
  Handle p;
  ASSERT_EQ(tg_graph_path(4, &p.g), TG_OK);
  int order = 0;
  size_t size = 0;
  ASSERT_EQ(tg_graph_order(p.g, &order), TG_OK);
  ASSERT_EQ(tg_graph_size(p.g, &size), TG_OK);
  EXPECT_EQ(order, 4);
  EXPECT_EQ(size, 3u);
  int edge = 0;
  ASSERT_EQ(tg_graph_has_edge(p.g, 1, 2, &edge), TG_OK);
  EXPECT_EQ(edge, 1);
  EXPECT_EQ(tg_graph_has_edge(p.g, 1, 9, &edge), TG_ERR_INDEX);

  char* g6 = nullptr;
  ASSERT_EQ(tg_graph_to_graph6(p.g, &g6), TG_OK);
  EXPECT_EQ(take(g6), "Ch");
}

TEST(CApi, TokenGraphAndStaircase) {
  Handle path, tok, cs;
  ASSERT_EQ(tg_graph_path(6, &path.g), TG_OK);
  ASSERT_EQ(tg_token_graph(path.g, 3, &tok.g), TG_OK);
  ASSERT_EQ(tg_staircase_graph(6, &cs.g), TG_OK);
  int found = 0;
  char* mapping = nullptr;
  ASSERT_EQ(tg_are_isomorphic(tok.g, cs.g, &found, &mapping), TG_OK);
  EXPECT_EQ(found, 1);
  EXPECT_EQ(take(mapping).front(), '[');
  uint64_t aut = 0;
  ASSERT_EQ(tg_automorphism_order(cs.g, &aut), TG_OK);
  EXPECT_EQ(aut, 4u);
  char* label = nullptr;
  ASSERT_EQ(tg_graph_label(tok.g, 0, &label), TG_OK);
  EXPECT_EQ(take(label), "{1,2,3}");
  char* json = nullptr;
  ASSERT_EQ(tg_invariants_json(cs.g, &json), TG_OK);
  EXPECT_NE(take(json).find("\"alpha\":10"), std::string::npos);
}

TEST(CApi, UnionsAndProducts) {
  Handle a, b, u, p, spec;
  ASSERT_EQ(tg_graph_cycle(3, &a.g), TG_OK);
  const int pairs[] = {0, 1, 1, 2, 2, 3};
  ASSERT_EQ(tg_graph_from_edges(4, pairs, 3, &b.g), TG_OK);
  ASSERT_EQ(tg_graph_disjoint_union(b.g, a.g, &u.g), TG_OK);
  ASSERT_EQ(tg_graph_cartesian_product(a.g, b.g, &p.g), TG_OK);
  ASSERT_EQ(tg_graph_from_spec("union:path:4+cycle:3", &spec.g), TG_OK);
  int found = 0;
  ASSERT_EQ(tg_are_isomorphic(u.g, spec.g, &found, nullptr), TG_OK);
  EXPECT_EQ(found, 1);
  size_t size = 0;
  ASSERT_EQ(tg_graph_size(p.g, &size), TG_OK);
  EXPECT_EQ(size, 3u * 4u + 3u * 3u);
  char* dot = nullptr;
  ASSERT_EQ(tg_graph_to_dot(u.g, 1, &dot), TG_OK);
  EXPECT_NE(take(dot).find("subgraph cluster_1"), std::string::npos);
}

TEST(CApi, ErrorStatuses) {
  Handle h;
  EXPECT_EQ(tg_graph_path(0, &h.g), TG_ERR_INVALID_SIZE);
  EXPECT_EQ(h.g, nullptr);
  EXPECT_NE(std::strlen(tg_last_error()), 0u);
  EXPECT_EQ(tg_staircase_graph(2, &h.g), TG_ERR_INVALID_SIZE);
  EXPECT_EQ(tg_graph_from_graph6("C~~", &h.g), TG_ERR_PARSE);
  EXPECT_EQ(tg_graph_from_spec("wheel:4", &h.g), TG_ERR_PARSE);
  const int loop[] = {1, 1};
  EXPECT_EQ(tg_graph_from_edges(3, loop, 1, &h.g), TG_ERR_DOMAIN);
  EXPECT_EQ(tg_graph_path(4, nullptr), TG_ERR_NULL_ARGUMENT);
  EXPECT_EQ(tg_graph_from_graph6(nullptr, &h.g), TG_ERR_NULL_ARGUMENT);

  Handle p;
  ASSERT_EQ(tg_graph_path(3, &p.g), TG_OK);
  EXPECT_EQ(tg_token_graph(p.g, 4, &h.g), TG_ERR_INVALID_K);
  int agree = 0;
  EXPECT_EQ(tg_conjecture_report(4, 20, nullptr, nullptr, &agree), TG_ERR_RESOURCE);
  EXPECT_STREQ(tg_status_name(TG_ERR_STRUCTURAL), "structural");
  EXPECT_STREQ(tg_status_name(TG_ERR_ARITY), "arity");
}

TEST(CApi, Suite) {
  tg_suite_config cfg;
  tg_suite_config_default(&cfg);
  EXPECT_EQ(cfg.n_min, 3);
  EXPECT_EQ(cfg.n_max, 9);
  EXPECT_EQ(cfg.seed, 42u);
  cfg.n_max = 5;
  cfg.record_timing = 0;
  char* json = nullptr;
  int code = -1;
  ASSERT_EQ(tg_run_suite(&cfg, &json, &code), TG_OK);
  EXPECT_EQ(code, 0);
  const std::string report = take(json);
  EXPECT_NE(report.find("\"verdict\": true"), std::string::npos);

  cfg.corrupt_self_test = 1;
  ASSERT_EQ(tg_run_suite(&cfg, &json, &code), TG_OK);
  take(json);
  EXPECT_EQ(code, 1);

  cfg.n_min = 1;
  EXPECT_EQ(tg_run_suite(&cfg, &json, &code), TG_ERR_DOMAIN);
}

TEST(CApi, Conjecture) {
  char* json = nullptr;
  char* text = nullptr;
  int agree = 0;
  ASSERT_EQ(tg_conjecture_report(4, 8, &json, &text, &agree), TG_OK);
  EXPECT_EQ(agree, 1);
  EXPECT_NE(take(json).find("CONJECTURE"), std::string::npos);
  EXPECT_NE(take(text).find("not a theorem"), std::string::npos);
}

}  // namespace
