#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tokgraph/graph.hpp"
#include "tokgraph/token.hpp"

namespace tokgraph {

/// Vertex (i, j, k) of the cubical staircase graph CS_n, 1-based.
struct StairCoord {
  int i = 1;
  int j = 1;
  int k = 1;

  /// 1 <= i <= n-2, 1 <= j <= i, 1 <= k <= n-1-i.
  bool valid_for(int n) const noexcept;

  friend auto operator<=>(const StairCoord&, const StairCoord&) = default;
};

std::string to_string(const StairCoord& c);

using StairEdge = std::pair<StairCoord, StairCoord>;

/// CS_n with its coordinates in lexicographic (i, j, k) order.
class StairGraph {
 public:
  explicit StairGraph(int n);

  int n() const noexcept { return n_; }
  const Graph& graph() const noexcept { return graph_; }
  const StairCoord& coord(int id) const { return coords_.at(static_cast<std::size_t>(id)); }
  const std::vector<StairCoord>& coords() const noexcept { return coords_; }
  int id_of(const StairCoord& c) const;

 private:
  int n_;
  std::vector<StairCoord> coords_;
  Graph graph_;
};

StairGraph staircase_graph(int n);

/// L1 distance between two coordinates of CS_n; equals the graph distance.
int staircase_distance(int n, const StairCoord& a, const StairCoord& b);

/// Maps the 3-subset {x_a, x_b, x_c} of P_n (0-based ids a < b < c, i.e.
/// path positions a+1 < b+1 < c+1) to (b, a+1, n-c).
StairCoord psi(const TokenVertex& s, int n);

/// Same map for three distinct 1-based path positions in any order.
StairCoord psi_positions(std::array<int, 3> positions, int n);

TokenVertex psi_inverse(const StairCoord& c, int n);

struct StairInvariants {
  int chi = 0;
  int omega = 0;
  long long alpha = 0;
  int diam = 0;
};

/// Closed forms for χ, ω, α and diameter of CS_n, n >= 3.
StairInvariants closed_form_invariants(int n);

/// Closed-form size of the largest matching of CS_n as conjectured:
/// (n³-3n²+2n)/12 for even n, (n³-3n²-n+3)/12 for odd n.
long long conjectured_matching_number(int n);

struct TwoColoring {
  std::vector<int> color;  // 0 when i+j+k is even, 1 when odd
  int classes = 0;
  std::array<int, 2> class_sizes{0, 0};
};

/// Colors by the parity of i+j+k. CS_3 yields the single class {0}.
TwoColoring parity_two_coloring(const StairGraph& sg);

/// Explicit vertex-disjoint edge family of CS_n (n >= 4) whose size meets
/// conjectured_matching_number(n).
std::vector<StairEdge> conjecture_matching_set(int n);

}  // namespace tokgraph
