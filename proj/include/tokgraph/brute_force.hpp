#pragma once

#include <cstdint>

#include "tokgraph/graph.hpp"

// Exhaustive reference computations. They share no code with the solvers
// they are used to check; keep them that way.

namespace tokgraph::brute_force {

/// Largest independent set over all 2^n subsets (n <= 24).
int independence_number(const Graph& g);
/// Largest clique over all 2^n subsets (n <= 24).
int clique_number(const Graph& g);
/// Minimum cover of V by independent sets, subset dynamic program (n <= 16).
int chromatic_number(const Graph& g);
/// Largest matching by enumerating every matching (small graphs only).
int matching_number(const Graph& g);
/// Number of permutations of V preserving adjacency (n <= 9).
std::uint64_t automorphism_count(const Graph& g);

}  // namespace tokgraph::brute_force
