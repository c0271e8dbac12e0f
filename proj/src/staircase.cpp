#include "tokgraph/staircase.hpp"

#include <algorithm>
#include <cstdlib>

#include "tokgraph/error.hpp"

namespace tokgraph {

bool StairCoord::valid_for(int n) const noexcept {
  return 1 <= i && i <= n - 2 && 1 <= j && j <= i && 1 <= k && k <= n - 1 - i;
}

std::string to_string(const StairCoord& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + "," + std::to_string(c.k) + ")";
}

namespace {

void require_order(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidSize, "CS_n needs n >= 3, got " + std::to_string(n));
}

void require_coord(int n, const StairCoord& c) {
  if (!c.valid_for(n)) {
    throw Error(ErrorCode::kDomain, to_string(c) + " is not a vertex of CS_" + std::to_string(n));
  }
}

}  // namespace

StairGraph::StairGraph(int n) : n_(n) {
  require_order(n);
  if (n > 64) throw Error(ErrorCode::kResource, "CS_n limited to n <= 64");
  for (int i = 1; i <= n - 2; ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= n - 1 - i; ++k) coords_.push_back({i, j, k});

  GraphBuilder b(static_cast<int>(coords_.size()));
  std::vector<std::string> labels;
  labels.reserve(coords_.size());
  for (const auto& c : coords_) labels.push_back(to_string(c));
  b.set_labels(std::move(labels));

  for (int i = 1; i <= n - 2; ++i) {
    for (int j = 1; j <= i; ++j) {
      for (int k = 1; k <= n - 2 - i; ++k) b.add_edge(id_of({i, j, k}), id_of({i, j, k + 1}));
    }
  }
  // (i+1, j, k) exists only for k <= n-2-i.
  for (int i = 1; i <= n - 3; ++i) {
    for (int j = 1; j <= i; ++j) {
      for (int k = 1; k <= n - 2 - i; ++k) b.add_edge(id_of({i, j, k}), id_of({i + 1, j, k}));
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    for (int j = 1; j <= i - 1; ++j) {
      for (int k = 1; k <= n - 1 - i; ++k) b.add_edge(id_of({i, j, k}), id_of({i, j + 1, k}));
    }
  }
  graph_ = std::move(b).build();
}

int StairGraph::id_of(const StairCoord& c) const {
  require_coord(n_, c);
  auto it = std::lower_bound(coords_.begin(), coords_.end(), c);
  return static_cast<int>(it - coords_.begin());
}

StairGraph staircase_graph(int n) { return StairGraph(n); }

int staircase_distance(int n, const StairCoord& a, const StairCoord& b) {
  require_order(n);
  require_coord(n, a);
  require_coord(n, b);
  return std::abs(a.i - b.i) + std::abs(a.j - b.j) + std::abs(a.k - b.k);
}

StairCoord psi(const TokenVertex& s, int n) {
  require_order(n);
  if (s.k() != 3 || !s.valid_for(n)) {
    throw Error(ErrorCode::kDomain, "psi needs a sorted 3-subset of 0.." + std::to_string(n - 1) +
                                        ", got " + to_string(s));
  }
  const int a = s.members[0];
  const int b = s.members[1];
  const int c = s.members[2];
  return {b, a + 1, n - c};
}

StairCoord psi_positions(std::array<int, 3> positions, int n) {
  std::vector<int> ids;
  for (int p : positions) ids.push_back(p - 1);
  return psi(make_token_vertex(std::move(ids), n), n);
}

TokenVertex psi_inverse(const StairCoord& c, int n) {
  require_order(n);
  require_coord(n, c);
  return TokenVertex{{c.j - 1, c.i, n - c.k}};
}

StairInvariants closed_form_invariants(int n) {
  require_order(n);
  const long long m = n;
  StairInvariants out;
  out.chi = n == 3 ? 1 : 2;
  out.omega = n == 3 ? 1 : 2;
  out.alpha = m % 2 == 0 ? (m * m * m - 3 * m * m + 2 * m) / 12
                         : (m * m * m - 3 * m * m + 5 * m - 3) / 12;
  out.diam = n == 3 ? 0 : 3 * (n - 3);
  return out;
}

long long conjectured_matching_number(int n) {
  require_order(n);
  const long long m = n;
  return m % 2 == 0 ? (m * m * m - 3 * m * m + 2 * m) / 12
                    : (m * m * m - 3 * m * m - m + 3) / 12;
}

TwoColoring parity_two_coloring(const StairGraph& sg) {
  TwoColoring out;
  out.color.reserve(sg.coords().size());
  for (const auto& c : sg.coords()) {
    const int color = sg.n() == 3 ? 0 : (c.i + c.j + c.k) % 2;
    out.color.push_back(color);
    ++out.class_sizes[static_cast<std::size_t>(color)];
  }
  out.classes = out.class_sizes[1] == 0 ? 1 : 2;
  return out;
}

std::vector<StairEdge> conjecture_matching_set(int n) {
  if (n < 4) throw Error(ErrorCode::kInvalidSize, "matching family needs n >= 4");
  std::vector<StairEdge> out;
  const bool even = n % 2 == 0;
  const int t_max = even ? (n - 2) / 2 : (n - 3) / 2;

  // Pairs along k within the lower odd layers.
  for (int t = 1; t <= t_max; ++t) {
    const int k = 2 * t - 1;
    for (int i = 1; i <= n - 2 - k; ++i)
      for (int j = 1; j <= i; ++j) out.push_back({{i, j, k}, {i, j, k + 1}});
  }
  // Pairs along j on the top layer k = n-1-i of the rows left unmatched.
  for (int t = 1; t <= t_max; ++t) {
    const int i = even ? 2 * t : 2 * t + 1;
    const int k = n - 1 - i;
    for (int s = 1; s <= t; ++s) out.push_back({{i, 2 * s - 1, k}, {i, 2 * s, k}});
  }
  return out;
}

}  // namespace tokgraph
