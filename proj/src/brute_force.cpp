#include "tokgraph/brute_force.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "tokgraph/error.hpp"

namespace tokgraph::brute_force {

namespace {

// Neighbourhood masks; the oracles only take graphs that fit in 32 bits.
std::vector<std::uint32_t> masks(const Graph& g, int limit) {
  if (g.order() > limit) {
    throw Error(ErrorCode::kResource, "exhaustive oracle limited to " + std::to_string(limit) + " vertices");
  }
  std::vector<std::uint32_t> m(static_cast<std::size_t>(g.order()), 0);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && g.has_edge(u, v)) m[static_cast<std::size_t>(u)] |= 1U << v;
  return m;
}

bool independent(const std::vector<std::uint32_t>& nb, std::uint32_t set) {
  for (std::uint32_t s = set; s; s &= s - 1) {
    if (nb[static_cast<std::size_t>(std::countr_zero(s))] & set) return false;
  }
  return true;
}

bool clique(const std::vector<std::uint32_t>& nb, std::uint32_t set) {
  for (std::uint32_t s = set; s; s &= s - 1) {
    const int v = std::countr_zero(s);
    if (((nb[static_cast<std::size_t>(v)] | (1U << v)) & set) != set) return false;
  }
  return true;
}

int matching_rec(const Graph& g, std::vector<bool>& used, int from) {
  int v = from;
  while (v < g.order() && used[static_cast<std::size_t>(v)]) ++v;
  if (v >= g.order()) return 0;
  used[static_cast<std::size_t>(v)] = true;
  int best = matching_rec(g, used, v + 1);  // v stays unmatched
  for (int u = v + 1; u < g.order(); ++u) {
    if (!used[static_cast<std::size_t>(u)] && g.has_edge(v, u)) {
      used[static_cast<std::size_t>(u)] = true;
      best = std::max(best, 1 + matching_rec(g, used, v + 1));
      used[static_cast<std::size_t>(u)] = false;
    }
  }
  used[static_cast<std::size_t>(v)] = false;
  return best;
}

}  // namespace

int independence_number(const Graph& g) {
  const auto nb = masks(g, 24);
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << g.order()); ++s) {
    if (std::popcount(s) > best && independent(nb, s)) best = std::popcount(s);
  }
  return best;
}

int clique_number(const Graph& g) {
  const auto nb = masks(g, 24);
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << g.order()); ++s) {
    if (std::popcount(s) > best && clique(nb, s)) best = std::popcount(s);
  }
  return best;
}

int chromatic_number(const Graph& g) {
  const auto nb = masks(g, 16);
  const std::uint32_t full = (1U << g.order()) - 1;
  std::vector<bool> indep(full + 1);
  for (std::uint32_t s = 0; s <= full; ++s) indep[s] = independent(nb, s);
  // colors[S] = fewest independent sets covering S.
  std::vector<int> colors(full + 1, g.order() + 1);
  colors[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    for (std::uint32_t t = s; t; t = (t - 1) & s) {
      if ((t & low) && indep[t]) colors[s] = std::min(colors[s], colors[s ^ t] + 1);
    }
  }
  return colors[full];
}

int matching_number(const Graph& g) {
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  return matching_rec(g, used, 0);
}

std::uint64_t automorphism_count(const Graph& g) {
  if (g.order() > 9) throw Error(ErrorCode::kResource, "permutation enumeration limited to 9 vertices");
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u)
      for (int v = u + 1; v < g.order() && ok; ++v)
        ok = g.has_edge(u, v) == g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace tokgraph::brute_force
