#pragma once

#include <random>

#include "tokgraph/graph.hpp"

namespace tokgraph {

using Rng = std::mt19937_64;

/// G(n, p) with edges decided in (u, v) lexicographic order.
inline Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

/// Random recursive spanning tree plus independent extra edges.
inline Graph random_connected_graph(Rng& rng, int n, double extra_p) {
  std::bernoulli_distribution coin(extra_p);
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    b.add_edge(pick(rng), v);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace tokgraph
