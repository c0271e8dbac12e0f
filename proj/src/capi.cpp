#include "tokgraph/tokgraph.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "tokgraph/error.hpp"
#include "tokgraph/graph.hpp"
#include "tokgraph/graph_io.hpp"
#include "tokgraph/graph_spec.hpp"
#include "tokgraph/invariants.hpp"
#include "tokgraph/isomorphism.hpp"
#include "tokgraph/staircase.hpp"
#include "tokgraph/suite.hpp"
#include "tokgraph/token.hpp"

struct tg_graph {
  tokgraph::Graph graph;
};

namespace {

thread_local std::string last_error;

tg_status status_of(tokgraph::ErrorCode code) {
  using tokgraph::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidSize: return TG_ERR_INVALID_SIZE;
    case ErrorCode::kInvalidK: return TG_ERR_INVALID_K;
    case ErrorCode::kIndex: return TG_ERR_INDEX;
    case ErrorCode::kDomain: return TG_ERR_DOMAIN;
    case ErrorCode::kParse: return TG_ERR_PARSE;
    case ErrorCode::kResource: return TG_ERR_RESOURCE;
    case ErrorCode::kStructural: return TG_ERR_STRUCTURAL;
    case ErrorCode::kArity: return TG_ERR_ARITY;
    case ErrorCode::kIo: return TG_ERR_IO;
  }
  return TG_ERR_INTERNAL;
}

template <typename F>
tg_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return TG_OK;
  } catch (const tokgraph::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return TG_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return TG_ERR_INTERNAL;
  }
}

bool null_args(std::initializer_list<const void*> ptrs) {
  for (const void* p : ptrs) {
    if (p == nullptr) {
      last_error = "null argument";
      return true;
    }
  }
  return false;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tg_status make_graph(tg_graph** out, auto&& build) {
  if (null_args({out})) return TG_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new tg_graph{build()}; });
}

}  // namespace

extern "C" {

const char* tg_version(void) { return tokgraph::kVersion; }
const char* tg_last_error(void) { return last_error.c_str(); }

const char* tg_status_name(tg_status status) {
  switch (status) {
    case TG_OK: return "ok";
    case TG_ERR_INVALID_SIZE: return "invalid-size";
    case TG_ERR_INVALID_K: return "invalid-k";
    case TG_ERR_INDEX: return "index";
    case TG_ERR_DOMAIN: return "domain";
    case TG_ERR_PARSE: return "parse";
    case TG_ERR_RESOURCE: return "resource";
    case TG_ERR_STRUCTURAL: return "structural";
    case TG_ERR_ARITY: return "arity";
    case TG_ERR_IO: return "io";
    case TG_ERR_NULL_ARGUMENT: return "null-argument";
    case TG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void tg_string_free(char* s) { std::free(s); }

tg_status tg_graph_path(int n, tg_graph** out) {
  return make_graph(out, [&] { return tokgraph::path_graph(n); });
}

tg_status tg_graph_cycle(int n, tg_graph** out) {
  return make_graph(out, [&] { return tokgraph::cycle_graph(n); });
}

tg_status tg_graph_complete(int n, tg_graph** out) {
  return make_graph(out, [&] { return tokgraph::complete_graph(n); });
}

tg_status tg_graph_from_edges(int n, const int* pairs, size_t edge_count, tg_graph** out) {
  if (edge_count > 0 && null_args({pairs})) return TG_ERR_NULL_ARGUMENT;
  return make_graph(out, [&] {
    tokgraph::GraphBuilder b(n);
    for (size_t e = 0; e < edge_count; ++e) b.add_edge(pairs[2 * e], pairs[2 * e + 1]);
    return std::move(b).build();
  });
}

tg_status tg_graph_from_graph6(const char* text, tg_graph** out) {
  if (null_args({text})) return TG_ERR_NULL_ARGUMENT;
  return make_graph(out, [&] { return tokgraph::parse_graph6(text); });
}

tg_status tg_graph_from_spec(const char* spec, tg_graph** out) {
  if (null_args({spec})) return TG_ERR_NULL_ARGUMENT;
  return make_graph(out, [&] { return tokgraph::parse_graph_spec(spec); });
}

tg_status tg_graph_disjoint_union(const tg_graph* g, const tg_graph* h, tg_graph** out) {
  if (null_args({g, h})) return TG_ERR_NULL_ARGUMENT;
  return make_graph(out, [&] { return tokgraph::disjoint_union(g->graph, h->graph); });
}

tg_status tg_graph_cartesian_product(const tg_graph* g, const tg_graph* h, tg_graph** out) {
  if (null_args({g, h})) return TG_ERR_NULL_ARGUMENT;
  return make_graph(out, [&] { return tokgraph::cartesian_product(g->graph, h->graph); });
}

tg_status tg_token_graph(const tg_graph* g, int k, tg_graph** out) {
  if (null_args({g})) return TG_ERR_NULL_ARGUMENT;
  return make_graph(out, [&] { return tokgraph::token_graph(g->graph, k).graph(); });
}

tg_status tg_staircase_graph(int n, tg_graph** out) {
  return make_graph(out, [&] { return tokgraph::staircase_graph(n).graph(); });
}

void tg_graph_free(tg_graph* g) { delete g; }

tg_status tg_graph_order(const tg_graph* g, int* out) {
  if (null_args({g, out})) return TG_ERR_NULL_ARGUMENT;
  *out = g->graph.order();
  return TG_OK;
}

tg_status tg_graph_size(const tg_graph* g, size_t* out) {
  if (null_args({g, out})) return TG_ERR_NULL_ARGUMENT;
  *out = g->graph.size();
  return TG_OK;
}

tg_status tg_graph_has_edge(const tg_graph* g, int u, int v, int* out) {
  if (null_args({g, out})) return TG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = g->graph.has_edge(u, v) ? 1 : 0; });
}

tg_status tg_graph_label(const tg_graph* g, int u, char** out) {
  if (null_args({g, out})) return TG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(g->graph.label(u)); });
}

tg_status tg_graph_to_graph6(const tg_graph* g, char** out) {
  if (null_args({g, out})) return TG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(tokgraph::emit_graph6(g->graph)); });
}

tg_status tg_graph_to_dot(const tg_graph* g, int cluster_components, char** out) {
  if (null_args({g, out})) return TG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    tokgraph::DotOptions opt;
    opt.cluster_components = cluster_components != 0;
    *out = dup_string(tokgraph::emit_dot(g->graph, opt));
  });
}

tg_status tg_invariants_json(const tg_graph* g, char** out) {
  if (null_args({g, out})) return TG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(tokgraph::to_json(tokgraph::full_report(g->graph))); });
}

tg_status tg_are_isomorphic(const tg_graph* g, const tg_graph* h, int* found, char** mapping_json) {
  if (null_args({g, h, found})) return TG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    auto m = tokgraph::are_isomorphic(g->graph, h->graph);
    *found = m ? 1 : 0;
    if (mapping_json != nullptr) *mapping_json = m ? dup_string(tokgraph::to_json(*m)) : nullptr;
  });
}

tg_status tg_automorphism_order(const tg_graph* g, uint64_t* order) {
  if (null_args({g, order})) return TG_ERR_NULL_ARGUMENT;
  return guarded([&] { *order = tokgraph::automorphism_count(g->graph).order; });
}

void tg_suite_config_default(tg_suite_config* cfg) {
  if (cfg == nullptr) return;
  const tokgraph::SuiteConfig d;
  cfg->profile = TG_PROFILE_THEOREMS;
  cfg->n_min = d.n_min;
  cfg->n_max = d.n_max;
  cfg->seed = d.seed;
  cfg->corrupt_self_test = 0;
  cfg->record_timing = 1;
}

tg_status tg_run_suite(const tg_suite_config* cfg, char** report_json, int* exit_code) {
  if (null_args({cfg, report_json, exit_code})) return TG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    tokgraph::SuiteConfig c;
    c.profile = cfg->profile == TG_PROFILE_CONJECTURE ? tokgraph::Profile::kConjecture : tokgraph::Profile::kTheorems;
    c.n_min = cfg->n_min;
    c.n_max = cfg->n_max;
    c.seed = cfg->seed;
    c.corrupt_self_test = cfg->corrupt_self_test != 0;
    c.record_timing = cfg->record_timing != 0;
    const auto report = tokgraph::run_suite(c);
    *report_json = dup_string(tokgraph::to_json(report, c.record_timing));
    *exit_code = tokgraph::exit_status(report);
  });
}

tg_status tg_conjecture_report(int n_min, int n_max, char** report_json, char** table_text, int* all_agree) {
  if (null_args({all_agree})) return TG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto r = tokgraph::conjecture_report(n_min, n_max);
    if (report_json != nullptr) *report_json = dup_string(tokgraph::to_json(r));
    if (table_text != nullptr) *table_text = dup_string(tokgraph::to_text(r));
    *all_agree = r.all_agree ? 1 : 0;
  });
}

tg_status tg_export_figures(const char* outdir, size_t* files_written) {
  if (null_args({outdir})) return TG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto files = tokgraph::export_figures(outdir);
    if (files_written != nullptr) *files_written = files.size();
  });
}

}  // extern "C"
