#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tokgraph/graph.hpp"

namespace tokgraph {

/// Total function V(G) -> V(H) stored as image[v].
struct VertexMapping {
  std::vector<int> image;

  int operator()(int v) const { return image.at(static_cast<std::size_t>(v)); }
  std::size_t size() const noexcept { return image.size(); }

  static VertexMapping identity(int n);
  VertexMapping inverse() const;
  /// (this ∘ other)(v) = this(other(v)).
  VertexMapping compose(const VertexMapping& other) const;

  friend bool operator==(const VertexMapping&, const VertexMapping&) = default;
};

/// JSON array of 1-based [source, target] pairs.
std::string to_json(const VertexMapping& m);

/// True iff m preserves edges and non-edges in both directions. Throws
/// kDomain when m is not a bijection between the vertex sets.
bool verify_mapping(const Graph& g, const Graph& h, const VertexMapping& m);

struct IsoBudget {
  int max_vertices = 200;
};

/// Witness isomorphism G -> H or nullopt. Invariant screening first, then
/// individualization and joint color refinement. Throws kResource above the
/// vertex budget.
std::optional<VertexMapping> are_isomorphic(const Graph& g, const Graph& h, const IsoBudget& budget = {});

struct AutGroupSummary {
  std::uint64_t order = 1;
  /// Strong generating set along the individualized base.
  std::vector<VertexMapping> generators;
  /// Order of every group element, sorted; filled when the group is small
  /// enough to enumerate (kMaxEnumeratedGroup).
  std::vector<int> element_orders;
  bool closure_checked = false;
};

inline constexpr std::uint64_t kMaxEnumeratedGroup = 5040;

/// |Aut(G)| by orbit-stabilizer over a refined search tree.
AutGroupSummary automorphism_count(const Graph& g, int max_vertices = 120);

/// Order of the permutation as a group element.
int permutation_order(const VertexMapping& m);

}  // namespace tokgraph
