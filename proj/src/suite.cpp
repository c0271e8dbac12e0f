#include "tokgraph/suite.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "tokgraph/brute_force.hpp"
#include "tokgraph/decomposition.hpp"
#include "tokgraph/error.hpp"
#include "tokgraph/graph_io.hpp"
#include "tokgraph/isomorphism.hpp"
#include "tokgraph/random_graphs.hpp"
#include "tokgraph/staircase.hpp"
#include "tokgraph/token.hpp"

namespace tokgraph {

void SuiteConfig::validate() const {
  if (n_min < 3 || n_min > n_max) {
    throw Error(ErrorCode::kDomain, "need 3 <= n_min <= n_max, got " + std::to_string(n_min) + ".." +
                                        std::to_string(n_max));
  }
  if (budget.max_vertices <= 0 || budget.max_hard_vertices <= 0 || iso_max_vertices <= 0 ||
      aut_max_vertices <= 0 || conjecture_max_n <= 0) {
    throw Error(ErrorCode::kDomain, "solver budgets must be positive");
  }
  if (random_pairs < 0 || oracle_instances < 0 || roundtrip_instances < 0) {
    throw Error(ErrorCode::kDomain, "instance counts must be non-negative");
  }
}

namespace {

using Records = std::vector<CheckRecord>;

struct Named {
  std::string name;
  Graph graph;
};

Named P(int n) { return {"P" + std::to_string(n), path_graph(n)}; }
Named C(int n) { return {"C" + std::to_string(n), cycle_graph(n)}; }
Named K(int n) { return {"K" + std::to_string(n), complete_graph(n)}; }

std::string join_names(const std::vector<Named>& gs) {
  std::string out;
  for (const auto& g : gs) out += (out.empty() ? "" : "+") + g.name;
  return out;
}

std::vector<Graph> graphs_of(const std::vector<Named>& gs) {
  std::vector<Graph> out;
  for (const auto& g : gs) out.push_back(g.graph);
  return out;
}

// Runs one check; the verdict is string equality of expected and computed.
CheckRecord check(std::string theorem, std::string instance, std::string source, std::string expected,
                  const std::function<std::string()>& compute, bool gating = true) {
  CheckRecord r;
  r.theorem = std::move(theorem);
  r.instance = std::move(instance);
  r.source = std::move(source);
  r.expected = std::move(expected);
  r.gating = gating;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.computed = compute();
    r.verdict = r.computed == r.expected;
  } catch (const Error& e) {
    r.error = std::string(to_string(e.code())) + ": " + e.what();
    r.resource_failure = e.code() == ErrorCode::kResource;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string str(long long v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

std::string n_tag(const char* family, int n) { return std::string(family) + "_" + std::to_string(n); }

VertexMapping psi_mapping(const TokenGraph& tg, const StairGraph& sg) {
  VertexMapping m;
  for (int v = 0; v < tg.order(); ++v) m.image.push_back(sg.id_of(psi(tg.vertex(v), sg.n())));
  return m;
}

Records vertex_counts(const SuiteConfig& cfg) {
  Records out;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const auto expected = str(static_cast<long long>(binomial(n, 3)));
    out.push_back(check("vertex-count", n_tag("T3(P)", n), "closed-form", expected,
                        [n] { return str(static_cast<long long>(token_graph(path_graph(n), 3).order())); }));
    out.push_back(check("vertex-count", n_tag("CS", n), "closed-form", expected,
                        [n] { return str(static_cast<long long>(staircase_graph(n).graph().order())); }));
  }
  return out;
}

Records isomorphisms(const SuiteConfig& cfg) {
  Records out;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    out.push_back(check("psi-isomorphism", n_tag("T3(P)->CS", n), "closed-form", "true", [n] {
      const auto tg = token_graph(path_graph(n), 3);
      const auto sg = staircase_graph(n);
      return str(verify_mapping(tg.graph(), sg.graph(), psi_mapping(tg, sg)));
    }));
    out.push_back(check("isomorphism-search", n_tag("T3(P)~CS", n), "closed-form", "true", [n, &cfg] {
      const auto tg = token_graph(path_graph(n), 3);
      const auto sg = staircase_graph(n);
      return str(are_isomorphic(tg.graph(), sg.graph(), {cfg.iso_max_vertices}).has_value());
    }));
  }
  return out;
}

Records staircase_metrics(const SuiteConfig& cfg) {
  Records out;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const auto closed = closed_form_invariants(n);
    if (n >= 4) {
      out.push_back(check("staircase-distance", n_tag("CS", n), "oracle", "0 mismatches", [n] {
        const auto sg = staircase_graph(n);
        long long bad = 0;
        for (int s = 0; s < sg.graph().order(); ++s) {
          const auto dist = bfs_distances(sg.graph(), s);
          for (int t = 0; t < sg.graph().order(); ++t) {
            if (dist[static_cast<std::size_t>(t)] != staircase_distance(n, sg.coord(s), sg.coord(t))) ++bad;
          }
        }
        return str(bad) + " mismatches";
      }));
      out.push_back(check("triangle-free", n_tag("CS", n), "closed-form", "true",
                          [n] { return str(triangle_free(staircase_graph(n).graph())); }));
      out.push_back(check("parity-coloring", n_tag("CS", n), "closed-form", "proper", [n] {
        const auto sg = staircase_graph(n);
        const auto col = parity_two_coloring(sg);
        for (const auto& e : sg.graph().edges()) {
          if (col.color[static_cast<std::size_t>(e.u)] == col.color[static_cast<std::size_t>(e.v)]) {
            return std::string("improper");
          }
        }
        return std::string("proper");
      }));
    }
    out.push_back(check("staircase-diameter", n_tag("CS", n), "closed-form", str(static_cast<long long>(closed.diam)), [n] {
      const auto d = diameter(staircase_graph(n).graph());
      return d ? str(static_cast<long long>(*d)) : std::string("inf");
    }));
    out.push_back(check("clique-number", n_tag("CS", n), "closed-form", str(static_cast<long long>(closed.omega)),
                        [n] { return str(static_cast<long long>(clique_number(staircase_graph(n).graph()))); }));
    out.push_back(check("chromatic-number", n_tag("CS", n), "closed-form", str(static_cast<long long>(closed.chi)),
                        [n] { return str(static_cast<long long>(chromatic_number(staircase_graph(n).graph()))); }));
    out.push_back(check("independence-number", n_tag("CS", n), "closed-form", str(closed.alpha),
                        [n] { return str(static_cast<long long>(independence_number(staircase_graph(n).graph()))); }));
    if (n <= 7) {
      out.push_back(check("independence-number", n_tag("CS", n) + " branch-and-bound", "closed-form", str(closed.alpha), [n] {
        return str(static_cast<long long>(independence_number_branch_and_bound(staircase_graph(n).graph())));
      }));
    }
  }
  return out;
}

std::string group_signature(const AutGroupSummary& s) {
  std::string out = "order=" + std::to_string(s.order);
  if (!s.element_orders.empty() && s.order <= 4) {
    out += " element_orders=";
    for (std::size_t i = 0; i < s.element_orders.size(); ++i) {
      out += (i ? "," : "") + std::to_string(s.element_orders[i]);
    }
  }
  return out;
}

Records automorphisms(const SuiteConfig& cfg) {
  Records out;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const std::string expected = n == 3   ? "order=1 element_orders=1"
                                 : n == 6 ? "order=4 element_orders=1,2,2,2"
                                          : "order=2 element_orders=1,2";
    out.push_back(check("automorphism-group", n_tag("T3(P)", n), "closed-form", expected, [n, &cfg] {
      return group_signature(automorphism_count(token_graph(path_graph(n), 3).graph(), cfg.aut_max_vertices));
    }));
  }
  return out;
}

std::string verdict_of(const DecompositionReport& r) {
  if (r.verdict) return "equal";
  std::string out = "differs";
  if (!r.missing_in_rhs.empty()) out += " missing-in-rhs " + r.missing_in_rhs.front();
  if (!r.missing_in_lhs.empty()) out += " missing-in-lhs " + r.missing_in_lhs.front();
  if (r.cross_class_edges) out += " cross-class " + std::to_string(r.cross_class_edges);
  return out;
}

CheckRecord two_graph_check(const std::string& theorem, const Named& g, const Named& h) {
  const std::string instance = g.name + "+" + h.name;
  return check(theorem, instance, "definition", "equal", [&] {
    const auto lhs = token_graph(disjoint_union(g.graph, h.graph), 3);
    return verdict_of(verify_decomposition(lhs, rhs_theorem2(g.graph, h.graph), instance));
  });
}

Records two_graph_decompositions(const SuiteConfig& cfg) {
  Records out;
  out.push_back(two_graph_check("path-pair-decomposition", P(4), P(4)));
  out.push_back(two_graph_check("two-graph-decomposition", P(4), C(3)));
  std::vector<Named> family;
  for (auto g : {P(3), P(4), P(5), C(3), C(4), K(3), K(4)}) {
    if (g.graph.order() <= cfg.n_max) family.push_back(std::move(g));
  }
  for (const auto& g : family)
    for (const auto& h : family) out.push_back(two_graph_check("two-graph-decomposition", g, h));

  Rng rng(cfg.seed);
  std::uniform_int_distribution<int> size(1, std::min(5, cfg.n_max));
  for (int t = 0; t < cfg.random_pairs; ++t) {
    const int a = size(rng);
    int b = size(rng);
    while (a + b < 3) b = size(rng);
    Named g{"R" + std::to_string(t) + "a", random_connected_graph(rng, a, 0.4)};
    Named h{"R" + std::to_string(t) + "b", random_connected_graph(rng, b, 0.4)};
    g.name += "[" + emit_graph6(g.graph) + "]";
    h.name += "[" + emit_graph6(h.graph) + "]";
    out.push_back(two_graph_check("two-graph-decomposition", g, h));
  }

  if (cfg.corrupt_self_test) {
    out.push_back(check("self-test", "P4+P4 with one rhs edge removed", "definition", "equal", [] {
      const auto lhs = token_graph(disjoint_union(path_graph(4), path_graph(4)), 3);
      auto rhs = rhs_theorem2(path_graph(4), path_graph(4));
      const auto e = rhs.graph.edges().front();
      rhs.graph = rhs.graph.without_edge(e.u, e.v);
      return verdict_of(verify_decomposition(lhs, rhs, "corrupted"));
    }));
  }
  return out;
}

Records multi_graph_decompositions(const SuiteConfig& /*cfg*/) {
  Records out;
  const std::vector<Named> base{P(3), P(4), C(3)};
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      for (std::size_t l = j; l < base.size(); ++l) {
        const std::vector<Named> parts{base[i], base[j], base[l]};
        const auto instance = join_names(parts);
        out.push_back(check("multi-graph-decomposition", instance, "definition", "equal", [parts, instance] {
          const auto gs = graphs_of(parts);
          const auto lhs = token_graph(disjoint_union(gs), 3);
          return verdict_of(verify_decomposition(lhs, rhs_theorem3(gs), instance));
        }));
      }
    }
  }

  const std::vector<std::vector<Named>> unions2{{P(3), P(3)}, {P(3), P(4)}, {P(3), P(4), C(3)}, {C(4), K(3)}};
  for (const auto& parts : unions2) {
    const auto instance = join_names(parts);
    out.push_back(check("two-token-union", instance, "definition", "equal", [parts, instance] {
      const auto gs = graphs_of(parts);
      const auto lhs = token_graph(disjoint_union(gs), 2);
      return verdict_of(verify_decomposition(lhs, rhs_2token_union(gs), instance));
    }));
  }

  const std::vector<Named> cycle_pool{P(3), P(4), C(3), C(4)};
  for (int n = 2; n <= 4; ++n) {
    std::vector<Named> parts;
    for (int i = 0; i < n; ++i) parts.push_back(cycle_pool[static_cast<std::size_t>(i) % cycle_pool.size()]);
    out.push_back(check("component-count", join_names(parts), "closed-form", str(components_formula(n)), [parts] {
      const auto g = disjoint_union(graphs_of(parts));
      return str(static_cast<long long>(connected_components(token_graph(g, 3).graph()).size()));
    }));
  }
  // Summands that are disconnected or too small: counted, not asserted.
  const std::vector<std::vector<Named>> outside{{P(2), P(2)}, {P(2), P(3), P(1)}, {{"2P2", disjoint_union(path_graph(2), path_graph(2))}, P(3)}};
  for (const auto& parts : outside) {
    const auto g = disjoint_union(graphs_of(parts));
    const auto count = str(static_cast<long long>(connected_components(token_graph(g, 3).graph()).size()));
    out.push_back(check("component-count", join_names(parts) + " (hypothesis not met)", "definition", count,
                        [count] { return count; }, false));
  }
  return out;
}

Records conjecture_rows(const SuiteConfig& cfg, bool gating) {
  Records out;
  const int lo = std::max(4, cfg.n_min);
  for (int n = lo; n <= cfg.n_max; ++n) {
    const auto formula = str(conjectured_matching_number(n));
    out.push_back(check("matching-conjecture", n_tag("T3(P)", n) + " CONJECTURE", "closed-form", formula, [n, &cfg] {
      if (n > cfg.conjecture_max_n) throw Error(ErrorCode::kResource, "conjecture rows capped at n = " + std::to_string(cfg.conjecture_max_n));
      return str(static_cast<long long>(matching_number(token_graph(path_graph(n), 3).graph())));
    }, gating));
    out.push_back(check("matching-conjecture", n_tag("CS", n) + " explicit family", "closed-form", formula + " matching", [n] {
      const auto sg = staircase_graph(n);
      Matching m;
      for (const auto& [a, b] : conjecture_matching_set(n)) m.emplace_back(sg.id_of(a), sg.id_of(b));
      return str(static_cast<long long>(m.size())) + (is_matching(sg.graph(), m) ? " matching" : " not-a-matching");
    }, gating));
  }
  return out;
}

Records oracle_equivalence(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 1);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::vector<Graph> graphs;
  for (int t = 0; t < cfg.oracle_instances; ++t) {
    const int n = size(rng);
    graphs.push_back(random_graph(rng, n, density(rng)));
  }
  const std::string expected = std::to_string(graphs.size()) + "/" + std::to_string(graphs.size()) + " agree";
  auto compare = [&](const char* name, int (*solver)(const Graph&), int (*oracle)(const Graph&)) {
    return check("oracle-equivalence", name, "oracle", expected, [&graphs, solver, oracle] {
      std::size_t agree = 0;
      std::string first_bad;
      for (const auto& g : graphs) {
        if (solver(g) == oracle(g)) {
          ++agree;
        } else if (first_bad.empty()) {
          first_bad = " first mismatch " + emit_graph6(g);
        }
      }
      return std::to_string(agree) + "/" + std::to_string(graphs.size()) + " agree" + first_bad;
    });
  };
  Records out;
  out.push_back(compare("alpha branch-and-bound", independence_number_branch_and_bound, brute_force::independence_number));
  out.push_back(compare("alpha", independence_number, brute_force::independence_number));
  out.push_back(compare("chi", chromatic_number, brute_force::chromatic_number));
  out.push_back(compare("omega", clique_number, brute_force::clique_number));
  out.push_back(compare("alpha_prime", matching_number, brute_force::matching_number));
  out.push_back(compare("alpha_prime blossom", [](const Graph& g) { return static_cast<int>(maximum_matching_general(g).size()); },
                        brute_force::matching_number));
  return out;
}

Records graph6_roundtrip(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 2);
  std::uniform_int_distribution<int> size(0, 20);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::vector<Graph> graphs;
  for (int t = 0; t < cfg.roundtrip_instances; ++t) {
    const int n = size(rng);
    graphs.push_back(random_graph(rng, n, density(rng)));
  }
  const std::string expected = std::to_string(graphs.size()) + "/" + std::to_string(graphs.size()) + " identical";
  return {check("graph6-roundtrip", "random graphs |V| <= 20", "definition", expected, [graphs] {
    std::size_t same = 0;
    for (const auto& g : graphs) {
      const auto text = emit_graph6(g);
      if (parse_graph6(text).same_adjacency(g) && emit_graph6(parse_graph6(text)) == text) ++same;
    }
    return std::to_string(same) + "/" + std::to_string(graphs.size()) + " identical";
  })};
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  std::vector<std::function<Records()>> groups;
  if (cfg.profile == Profile::kTheorems) {
    groups = {
        [&] { return vertex_counts(cfg); },
        [&] { return isomorphisms(cfg); },
        [&] { return staircase_metrics(cfg); },
        [&] { return automorphisms(cfg); },
        [&] { return two_graph_decompositions(cfg); },
        [&] { return multi_graph_decompositions(cfg); },
        [&] { return conjecture_rows(cfg, false); },
        [&] { return oracle_equivalence(cfg); },
        [&] { return graph6_roundtrip(cfg); },
    };
  } else {
    groups = {[&] { return conjecture_rows(cfg, true); }};
  }

  std::vector<std::future<Records>> running;
  for (auto& g : groups) running.push_back(std::async(std::launch::async, g));

  VerificationReport report;
  report.suite = cfg.profile == Profile::kTheorems ? "theorems" : "conjecture";
  for (auto& f : running) {
    for (auto& r : f.get()) {
      if (!cfg.record_timing) r.runtime_ms = 0.0;
      report.checks.push_back(std::move(r));
    }
  }
  report.verdict = std::all_of(report.checks.begin(), report.checks.end(),
                               [](const CheckRecord& r) { return r.verdict || !r.gating; });
  return report;
}

std::string to_json(const VerificationReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["version"] = r.version;
  j["verdict"] = r.verdict;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json rec;
    rec["theorem"] = c.theorem;
    rec["instance"] = c.instance;
    rec["expected"] = c.expected;
    rec["computed"] = c.computed;
    rec["source"] = c.source;
    rec["verdict"] = c.verdict;
    rec["gating"] = c.gating;
    if (!c.error.empty()) rec["error"] = c.error;
    if (include_timing) rec["runtime_ms"] = c.runtime_ms;
    checks.push_back(std::move(rec));
  }
  j["checks"] = std::move(checks);
  return j.dump(2);
}

int exit_status(const VerificationReport& r) {
  bool resource = false;
  for (const auto& c : r.checks) {
    if (c.verdict || !c.gating) continue;
    if (!c.resource_failure) return 1;
    resource = true;
  }
  return resource ? 3 : 0;
}

ConjectureReport conjecture_report(int n_min, int n_max, int max_n) {
  if (n_min < 4 || n_min > n_max) {
    throw Error(ErrorCode::kDomain, "conjecture report needs 4 <= n_min <= n_max");
  }
  if (n_max > max_n) {
    throw Error(ErrorCode::kResource, "conjecture report limited to n <= " + std::to_string(max_n));
  }
  ConjectureReport out;
  out.all_agree = true;
  for (int n = n_min; n <= n_max; ++n) {
    ConjectureRow row;
    row.n = n;
    row.formula = conjectured_matching_number(n);
    row.computed = matching_number(token_graph(path_graph(n), 3).graph());
    const auto sg = staircase_graph(n);
    Matching m;
    for (const auto& [a, b] : conjecture_matching_set(n)) m.emplace_back(sg.id_of(a), sg.id_of(b));
    row.constructed = static_cast<long long>(m.size());
    row.constructed_is_matching = is_matching(sg.graph(), m);
    row.agrees = row.computed == row.formula && row.constructed == row.formula && row.constructed_is_matching;
    out.all_agree = out.all_agree && row.agrees;
    out.rows.push_back(row);
  }
  return out;
}

std::string to_json(const ConjectureReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = "CONJECTURE";
  j["all_agree"] = r.all_agree;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"computed", row.computed},
                    {"constructed", row.constructed},
                    {"formula", row.formula},
                    {"constructed_is_matching", row.constructed_is_matching},
                    {"agrees", row.agrees}});
  }
  j["rows"] = std::move(rows);
  return j.dump(2);
}

std::string to_text(const ConjectureReport& r) {
  std::ostringstream os;
  os << "CONJECTURE (not a theorem): matching number of Gamma3(P_n)\n";
  os << "   n  computed  constructed  formula  agrees\n";
  for (const auto& row : r.rows) {
    os << std::setw(4) << row.n << std::setw(10) << row.computed << std::setw(13) << row.constructed
       << std::setw(9) << row.formula << std::setw(8) << (row.agrees ? "yes" : "NO") << "\n";
  }
  return os.str();
}

std::vector<std::string> export_figures(const std::string& outdir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + outdir + ": " + ec.message());

  struct Figure {
    std::string stem;
    Graph graph;
    bool clusters;
  };
  std::vector<Figure> figures{
      {"fig1_gamma3_2P4", token_graph(disjoint_union(path_graph(4), path_graph(4)), 3).graph(), true},
      // Triangle on 1..3, path on 4..7, as drawn.
      {"fig2_gamma3_P4_C3", token_graph(disjoint_union(cycle_graph(3), path_graph(4)), 3).graph(), true},
      {"fig3_cs8", staircase_graph(8).graph(), false},
  };
  for (int n = 4; n <= 7; ++n) figures.push_back({"fig4_cs" + std::to_string(n), staircase_graph(n).graph(), false});
  figures.push_back({"fig5_cs6", staircase_graph(6).graph(), false});

  std::vector<std::string> written;
  auto write = [&](const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + p.string());
    written.push_back(p.string());
  };
  for (const auto& f : figures) {
    write(fs::path(outdir) / (f.stem + ".dot"), emit_dot(f.graph, {f.stem, f.clusters}));
    write(fs::path(outdir) / (f.stem + ".g6"), emit_graph6(f.graph) + "\n");
  }
  return written;
}

}  // namespace tokgraph
