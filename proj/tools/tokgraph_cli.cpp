// tokgraph command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "tokgraph/tokgraph.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct GraphDeleter {
  void operator()(tg_graph* g) const { tg_graph_free(g); }
};
using GraphPtr = std::unique_ptr<tg_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { tg_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_for(tg_status s) {
  switch (s) {
    case TG_OK: return kExitPass;
    case TG_ERR_RESOURCE: return kExitResource;
    case TG_ERR_IO:
    case TG_ERR_INTERNAL: return kExitFailure;
    default: return kExitUsage;
  }
}

int report(tg_status s) {
  std::cerr << "tokgraph: " << tg_status_name(s) << " error: " << tg_last_error() << "\n";
  return exit_for(s);
}

int print_graph(const tg_graph* g, const std::string& format) {
  char* raw = nullptr;
  tg_status s = TG_OK;
  if (format == "dot") {
    s = tg_graph_to_dot(g, 0, &raw);
  } else if (format == "json") {
    s = tg_invariants_json(g, &raw);
  } else {
    s = tg_graph_to_graph6(g, &raw);
  }
  if (s != TG_OK) return report(s);
  StringPtr text(raw);
  std::cout << text.get();
  if (format != "dot") std::cout << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tokgraph: token graphs, cubical staircase graphs and their verification suite"};
  app.set_version_flag("--version", std::string(tg_version()));
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a graph and print it");
  gen->require_subcommand(1);
  std::string format = "g6";
  auto* gen_token = gen->add_subcommand("token", "k-token graph of a base graph");
  std::string token_spec;
  int token_k = 0;
  gen_token->add_option("--graph", token_spec, "path:<n> | cycle:<n> | complete:<n> | union:<a>+<b> | graph6")->required();
  gen_token->add_option("--k", token_k, "number of tokens")->required();
  gen_token->add_option("--format", format, "g6, dot or json (invariants)")->check(CLI::IsMember({"g6", "dot", "json"}));
  auto* gen_stair = gen->add_subcommand("staircase", "cubical staircase graph CS_n");
  int stair_n = 0;
  gen_stair->add_option("--n", stair_n, "n >= 3")->required();
  gen_stair->add_option("--format", format, "g6, dot or json (invariants)")->check(CLI::IsMember({"g6", "dot", "json"}));

  auto* inv = app.add_subcommand("invariants", "Exact invariant report as JSON");
  std::string inv_in;
  inv->add_option("--in", inv_in, "graph6 text, graph6 file or graph spec")->required();

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  std::string suite = "theorems";
  tg_suite_config cfg;
  tg_suite_config_default(&cfg);
  std::string json_path;
  bool corrupt = false;
  bool no_timing = false;
  verify->add_option("--suite", suite, "theorems or conjecture")->check(CLI::IsMember({"theorems", "conjecture"}));
  verify->add_option("--n-min", cfg.n_min, "smallest n for path/staircase families");
  verify->add_option("--n-max", cfg.n_max, "largest n for path/staircase families");
  verify->add_option("--seed", cfg.seed, "seed for random instances");
  verify->add_option("--json", json_path, "write the JSON report here");
  verify->add_flag("--self-test-corrupt", corrupt, "inject a corrupted decomposition; the run must fail");
  verify->add_flag("--no-timing", no_timing, "omit runtimes so reports are byte-reproducible");

  auto* conj = app.add_subcommand("conjecture", "Print the matching-number conjecture table");
  int conj_min = 4;
  int conj_max = 10;
  conj->add_option("--n-min", conj_min, "smallest n, at least 4");
  conj->add_option("--n-max", conj_max, "largest n");

  auto* fig = app.add_subcommand("export-figures", "Write DOT and graph6 files for the figure graphs");
  std::string outdir;
  fig->add_option("--out", outdir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*gen_token) {
    tg_graph* base = nullptr;
    if (auto s = tg_graph_from_spec(token_spec.c_str(), &base); s != TG_OK) return report(s);
    GraphPtr base_ptr(base);
    tg_graph* tok = nullptr;
    if (auto s = tg_token_graph(base, token_k, &tok); s != TG_OK) return report(s);
    GraphPtr tok_ptr(tok);
    return print_graph(tok, format);
  }
  if (*gen_stair) {
    tg_graph* g = nullptr;
    if (auto s = tg_staircase_graph(stair_n, &g); s != TG_OK) return report(s);
    GraphPtr ptr(g);
    return print_graph(g, format);
  }
  if (*inv) {
    tg_graph* g = nullptr;
    if (auto s = tg_graph_from_spec(inv_in.c_str(), &g); s != TG_OK) return report(s);
    GraphPtr ptr(g);
    return print_graph(g, "json");
  }
  if (*verify) {
    cfg.profile = suite == "conjecture" ? TG_PROFILE_CONJECTURE : TG_PROFILE_THEOREMS;
    cfg.corrupt_self_test = corrupt ? 1 : 0;
    cfg.record_timing = no_timing ? 0 : 1;
    char* raw = nullptr;
    int code = 0;
    if (auto s = tg_run_suite(&cfg, &raw, &code); s != TG_OK) return report(s);
    StringPtr json(raw);
    if (!json_path.empty()) {
      std::ofstream out(json_path, std::ios::binary);
      out << json.get() << "\n";
      if (!out) {
        std::cerr << "tokgraph: cannot write " << json_path << "\n";
        return kExitFailure;
      }
    } else {
      std::cout << json.get() << "\n";
    }
    std::cerr << "verify " << suite << ": " << (code == 0 ? "PASS" : code == 3 ? "RESOURCE" : "FAIL") << "\n";
    return code;
  }
  if (*conj) {
    char* table = nullptr;
    int agree = 0;
    if (auto s = tg_conjecture_report(conj_min, conj_max, nullptr, &table, &agree); s != TG_OK) return report(s);
    StringPtr t(table);
    std::cout << t.get();
    return kExitPass;
  }
  if (*fig) {
    size_t files = 0;
    if (auto s = tg_export_figures(outdir.c_str(), &files); s != TG_OK) return report(s);
    std::cout << "wrote " << files << " files to " << outdir << "\n";
    return kExitPass;
  }
  return kExitUsage;
}
