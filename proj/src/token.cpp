#include "tokgraph/token.hpp"

#include <algorithm>
#include <limits>

#include "tokgraph/error.hpp"

namespace tokgraph {

bool TokenVertex::valid_for(int n) const noexcept {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= n) return false;
    if (i > 0 && members[i - 1] >= members[i]) return false;
  }
  return true;
}

std::string to_string(const TokenVertex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(s.members[i] + 1);
  }
  out.push_back('}');
  return out;
}

TokenVertex make_token_vertex(std::vector<int> ids, int n) {
  std::sort(ids.begin(), ids.end());
  TokenVertex s{std::move(ids)};
  if (!s.valid_for(n)) {
    throw Error(ErrorCode::kDomain, "ids are not distinct members of 0.." +
                                        std::to_string(n - 1));
  }
  return s;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      throw Error(ErrorCode::kResource, "binomial coefficient overflows 64 bits");
    }
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t rank_subset(const TokenVertex& s) {
  std::uint64_t r = 0;
  for (std::size_t p = 0; p < s.members.size(); ++p) {
    if (s.members[p] < 0 || (p > 0 && s.members[p - 1] >= s.members[p])) {
      throw Error(ErrorCode::kIndex, "subset " + to_string(s) + " is not strictly increasing");
    }
    r += binomial(s.members[p], static_cast<int>(p) + 1);
  }
  return r;
}

TokenVertex unrank_subset(std::uint64_t id, int n, int k) {
  if (k < 0 || k > n || id >= binomial(n, k)) {
    throw Error(ErrorCode::kIndex, "rank " + std::to_string(id) + " out of range for C(" +
                                       std::to_string(n) + "," + std::to_string(k) + ")");
  }
  TokenVertex s;
  s.members.resize(static_cast<std::size_t>(k));
  int hi = n - 1;
  for (int p = k - 1; p >= 0; --p) {
    while (binomial(hi, p + 1) > id) --hi;
    s.members[static_cast<std::size_t>(p)] = hi;
    id -= binomial(hi, p + 1);
    --hi;
  }
  return s;
}

TokenGraph::TokenGraph(Graph base, int k) : base_(std::move(base)), k_(k) {
  const int n = base_.order();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidK, "k = " + std::to_string(k) +
                                          " outside 1.." + std::to_string(n));
  }
  const std::uint64_t count = binomial(n, k);
  if (count > kMaxTokenVertices) {
    throw Error(ErrorCode::kResource, "token graph would have " + std::to_string(count) +
                                          " vertices");
  }
  GraphBuilder b(static_cast<int>(count));
  std::vector<std::string> labels;
  labels.reserve(count);

  // Colex successor enumeration; for each subset swap one member for an
  // outside base neighbour and keep edges towards higher ranks only.
  TokenVertex s;
  for (int i = 0; i < k; ++i) s.members.push_back(i);
  std::vector<bool> in_set(static_cast<std::size_t>(n), false);
  for (std::uint64_t id = 0; id < count; ++id) {
    labels.push_back(to_string(s));
    for (int x : s.members) in_set[static_cast<std::size_t>(x)] = true;
    for (std::size_t p = 0; p < s.members.size(); ++p) {
      const int x = s.members[p];
      for (int y : base_.neighbors(x)) {
        if (in_set[static_cast<std::size_t>(y)]) continue;
        TokenVertex t = s;
        t.members[p] = y;
        std::sort(t.members.begin(), t.members.end());
        const std::uint64_t other = rank_subset(t);
        if (other > id) b.add_edge(static_cast<int>(id), static_cast<int>(other));
      }
    }
    for (int x : s.members) in_set[static_cast<std::size_t>(x)] = false;

    // advance to the colex successor
    int p = 0;
    while (p + 1 < k && s.members[static_cast<std::size_t>(p)] + 1 ==
                            s.members[static_cast<std::size_t>(p) + 1]) {
      ++p;
    }
    s.members[static_cast<std::size_t>(p)] += 1;
    for (int q = 0; q < p; ++q) s.members[static_cast<std::size_t>(q)] = q;
  }
  b.set_labels(std::move(labels));
  graph_ = std::move(b).build();
}

TokenVertex TokenGraph::vertex(int id) const {
  return unrank_subset(static_cast<std::uint64_t>(id), base_.order(), k_);
}

int TokenGraph::id_of(const TokenVertex& s) const {
  if (s.k() != k_ || !s.valid_for(base_.order())) {
    throw Error(ErrorCode::kIndex, "subset " + to_string(s) + " is not a vertex of this token graph");
  }
  return static_cast<int>(rank_subset(s));
}

TokenGraph token_graph(const Graph& g, int k) { return TokenGraph(g, k); }

}  // namespace tokgraph
