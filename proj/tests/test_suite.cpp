#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "tokgraph/error.hpp"
#include "tokgraph/graph_io.hpp"
#include "tokgraph/isomorphism.hpp"
#include "tokgraph/staircase.hpp"
#include "tokgraph/suite.hpp"

namespace tokgraph {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++n;
  return n;
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("tokgraph_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

TEST(Suite, DefaultConfigPasses) {
  SuiteConfig cfg;
  const auto report = run_suite(cfg);
  EXPECT_TRUE(report.verdict);
  EXPECT_EQ(exit_status(report), 0);
  EXPECT_EQ(report.suite, "theorems");
  for (const auto& c : report.checks) {
    if (c.gating) {
      EXPECT_TRUE(c.verdict) << c.theorem << " " << c.instance << " " << c.computed << " " << c.error;
    }
    EXPECT_FALSE(c.source.empty());
  }
}

TEST(Suite, Deterministic) {
  SuiteConfig cfg;
  cfg.record_timing = false;
  const auto a = to_json(run_suite(cfg), false);
  const auto b = to_json(run_suite(cfg), false);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("runtime_ms"), std::string::npos);
}

TEST(Suite, SmallRange) {
  SuiteConfig cfg;
  cfg.n_max = 4;
  const auto report = run_suite(cfg);
  EXPECT_TRUE(report.verdict);
  for (const auto& c : report.checks) EXPECT_EQ(c.instance.find("CS_9"), std::string::npos);
}

TEST(Suite, CorruptionFails) {
  SuiteConfig cfg;
  cfg.n_max = 4;
  cfg.corrupt_self_test = true;
  const auto report = run_suite(cfg);
  EXPECT_FALSE(report.verdict);
  EXPECT_EQ(exit_status(report), 1);
}

TEST(Suite, ConjectureProfile) {
  SuiteConfig cfg;
  cfg.profile = Profile::kConjecture;
  cfg.n_min = 4;
  const auto report = run_suite(cfg);
  EXPECT_EQ(report.suite, "conjecture");
  EXPECT_TRUE(report.verdict);
  for (const auto& c : report.checks) EXPECT_TRUE(c.gating);
}

TEST(Suite, ResourceFailureExitCode) {
  VerificationReport r;
  CheckRecord c;
  c.resource_failure = true;
  r.checks.push_back(c);
  EXPECT_EQ(exit_status(r), 3);
  CheckRecord bad;
  r.checks.push_back(bad);
  EXPECT_EQ(exit_status(r), 1);
  CheckRecord informative;
  informative.gating = false;
  EXPECT_EQ(exit_status(VerificationReport{"x", kVersion, {informative}, true}), 0);
}

TEST(Suite, ConfigValidation) {
  SuiteConfig cfg;
  cfg.n_min = 2;
  EXPECT_THROW(run_suite(cfg), Error);
  cfg.n_min = 6;
  cfg.n_max = 5;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.n_max = 6;
  cfg.iso_max_vertices = 0;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(Conjecture, Rows) {
  const auto r = conjecture_report(4, 10);
  ASSERT_EQ(r.rows.size(), 7u);
  const long long formula[] = {2, 4, 10, 16, 28, 40, 60};
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    EXPECT_EQ(r.rows[i].formula, formula[i]);
    EXPECT_EQ(r.rows[i].constructed, formula[i]);
    EXPECT_TRUE(r.rows[i].constructed_is_matching);
    EXPECT_GE(r.rows[i].computed, r.rows[i].constructed);
  }
  EXPECT_EQ(r.rows[0].computed, 2);
  EXPECT_EQ(r.rows[1].computed, 4);
  EXPECT_NE(to_text(r).find("CONJECTURE"), std::string::npos);
  EXPECT_NE(to_json(r).find("\"kind\": \"CONJECTURE\""), std::string::npos);
}

TEST(Conjecture, Limits) {
  try {
    conjecture_report(4, 13);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResource);
  }
  EXPECT_THROW(conjecture_report(3, 5), Error);
}

TEST(Figures, Export) {
  const auto dir = scratch_dir("figures");
  fs::create_directories(dir);
  const auto files = export_figures(dir.string());
  EXPECT_EQ(files.size(), 16u);

  const auto cs8 = slurp(dir / "fig3_cs8.dot");
  EXPECT_EQ(count(cs8, "[label="), 56u);
  EXPECT_EQ(count(cs8, " -- "), 105u);

  const auto two_paths = slurp(dir / "fig1_gamma3_2P4.dot");
  EXPECT_EQ(count(two_paths, "subgraph cluster_"), 4u);
  EXPECT_EQ(count(two_paths, "[label="), 56u);

  const auto mixed = slurp(dir / "fig2_gamma3_P4_C3.dot");
  EXPECT_NE(mixed.find("\"{1,2,4}\""), std::string::npos);

  const auto cs4 = slurp(dir / "fig4_cs4.dot");
  EXPECT_EQ(count(cs4, "[label="), 4u);
  EXPECT_EQ(count(cs4, " -- "), 3u);

  std::ifstream g6(dir / "fig5_cs6.g6");
  std::string line;
  std::getline(g6, line);
  EXPECT_TRUE(are_isomorphic(parse_graph6(line), staircase_graph(6).graph()).has_value());
  fs::remove_all(dir);
}

TEST(Figures, UnwritableDirectory) {
  const auto dir = scratch_dir("blocked");
  std::ofstream(dir.string()) << "file in the way";
  try {
    export_figures((dir / "sub").string());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
  fs::remove(dir);
}

}  // namespace
}  // namespace tokgraph
