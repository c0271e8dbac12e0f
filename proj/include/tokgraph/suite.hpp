#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tokgraph/invariants.hpp"

namespace tokgraph {

inline constexpr const char* kVersion = "0.1.0";

enum class Profile {
  /// Every theorem instance gates; conjecture rows are informational.
  kTheorems,
  /// Only the matching-number conjecture rows, and they gate.
  kConjecture,
};

struct SuiteConfig {
  Profile profile = Profile::kTheorems;
  int n_min = 3;
  int n_max = 9;
  std::uint64_t seed = 42;
  SolverBudget budget{};
  int iso_max_vertices = 200;
  int aut_max_vertices = 120;
  /// Largest n for which the conjecture rows are computed.
  int conjecture_max_n = 12;
  int random_pairs = 50;
  int oracle_instances = 200;
  int roundtrip_instances = 100;
  /// Feed a right-hand side with one edge removed into a gating check.
  bool corrupt_self_test = false;
  bool record_timing = true;

  /// Throws kDomain unless 3 <= n_min <= n_max and every budget is positive.
  void validate() const;
};

struct CheckRecord {
  std::string theorem;
  std::string instance;
  std::string expected;
  std::string computed;
  /// Where the expected value comes from: "closed-form", "oracle" or "definition".
  std::string source;
  bool verdict = false;
  bool gating = true;
  bool resource_failure = false;
  std::string error;
  double runtime_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::string version = kVersion;
  std::vector<CheckRecord> checks;
  /// True iff every gating record passed.
  bool verdict = false;
};

/// Deterministic for a fixed config (up to runtime_ms). Check groups run
/// concurrently; records are assembled in a fixed order.
VerificationReport run_suite(const SuiteConfig& cfg);

std::string to_json(const VerificationReport& r, bool include_timing = true);

/// 0 pass, 1 a gating check failed, 3 only resource failures.
int exit_status(const VerificationReport& r);

struct ConjectureRow {
  int n = 0;
  long long computed = 0;
  long long constructed = 0;
  long long formula = 0;
  bool constructed_is_matching = false;
  bool agrees = false;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  bool all_agree = false;
};

/// Matching number of Γ3(P_n) against the conjectured closed form and the
/// explicit edge family, 4 <= n_min <= n_max <= max_n.
ConjectureReport conjecture_report(int n_min, int n_max, int max_n = 12);
std::string to_json(const ConjectureReport& r);
std::string to_text(const ConjectureReport& r);

/// Writes DOT and graph6 files for Γ3(2P_4), Γ3(P_4 ⊕ C_3), CS_4..CS_8 into
/// outdir (created if needed). Returns the written paths. Throws kIo.
std::vector<std::string> export_figures(const std::string& outdir);

}  // namespace tokgraph
