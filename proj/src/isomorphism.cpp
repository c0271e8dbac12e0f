#include "tokgraph/isomorphism.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include <json.hpp>

#include "tokgraph/error.hpp"

namespace tokgraph {

VertexMapping VertexMapping::identity(int n) {
  VertexMapping m;
  m.image.resize(static_cast<std::size_t>(n));
  std::iota(m.image.begin(), m.image.end(), 0);
  return m;
}

VertexMapping VertexMapping::inverse() const {
  VertexMapping m;
  m.image.assign(image.size(), -1);
  for (std::size_t v = 0; v < image.size(); ++v) m.image.at(static_cast<std::size_t>(image[v])) = static_cast<int>(v);
  return m;
}

VertexMapping VertexMapping::compose(const VertexMapping& other) const {
  VertexMapping m;
  m.image.reserve(other.image.size());
  for (int v : other.image) m.image.push_back((*this)(v));
  return m;
}

std::string to_json(const VertexMapping& m) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t v = 0; v < m.image.size(); ++v) j.push_back({v + 1, m.image[v] + 1});
  return j.dump();
}

bool verify_mapping(const Graph& g, const Graph& h, const VertexMapping& m) {
  if (g.order() != h.order() || m.size() != static_cast<std::size_t>(g.order())) {
    throw Error(ErrorCode::kDomain, "mapping is not total between equal-size vertex sets");
  }
  std::vector<bool> hit(static_cast<std::size_t>(h.order()), false);
  for (int w : m.image) {
    if (w < 0 || w >= h.order() || hit[static_cast<std::size_t>(w)]) {
      throw Error(ErrorCode::kDomain, "mapping is not a bijection");
    }
    hit[static_cast<std::size_t>(w)] = true;
  }
  if (g.size() != h.size()) return false;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v) != h.has_edge(m(u), m(v))) return false;
    }
  }
  return true;
}

int permutation_order(const VertexMapping& m) {
  std::vector<bool> seen(m.size(), false);
  long long order = 1;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (seen[s]) continue;
    long long len = 0;
    for (std::size_t v = s; !seen[v]; v = static_cast<std::size_t>(m.image[v])) {
      seen[v] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

namespace {

using Colors = std::vector<int>;

// Color refinement on G ⊕ H. Both halves are refined together so equal color
// ids mean equal roles; H's vertex w sits at index offset + w.
class JointRefiner {
 public:
  JointRefiner(const Graph& g, const Graph& h) : g_(g), h_(h), offset_(g.order()) {
    for (int v = 0; v < g.order(); ++v) adj_.push_back(g.neighbors(v));
    for (int v = 0; v < h.order(); ++v) {
      auto nb = h.neighbors(v);
      for (int& w : nb) w += offset_;
      adj_.push_back(std::move(nb));
    }
  }

  int offset() const noexcept { return offset_; }
  std::size_t total() const noexcept { return adj_.size(); }

  Colors refine(Colors colors) const {
    int classes = count_classes(colors);
    const std::size_t n = adj_.size();
    std::vector<std::vector<int>> sig(n);
    std::vector<std::size_t> by_sig(n);
    for (;;) {
      for (std::size_t v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.clear();
        for (int w : adj_[v]) s.push_back(colors[static_cast<std::size_t>(w)]);
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), colors[v]);
      }
      std::iota(by_sig.begin(), by_sig.end(), 0);
      std::sort(by_sig.begin(), by_sig.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
      int next = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r > 0 && sig[by_sig[r]] != sig[by_sig[r - 1]]) ++next;
        colors[by_sig[r]] = next;
      }
      const int refined = n == 0 ? 0 : next + 1;
      if (refined == classes) return colors;
      classes = refined;
    }
  }

  bool balanced(const Colors& colors) const {
    std::vector<int> diff(colors.size() + 1, 0);
    for (std::size_t v = 0; v < colors.size(); ++v) {
      diff[static_cast<std::size_t>(colors[v])] += v < static_cast<std::size_t>(offset_) ? 1 : -1;
    }
    return std::all_of(diff.begin(), diff.end(), [](int d) { return d == 0; });
  }

  // Smallest color that is not a singleton on the G side, or -1.
  int target_cell(const Colors& colors) const {
    std::vector<int> count(colors.size() + 1, 0);
    for (int v = 0; v < offset_; ++v) ++count[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
    for (std::size_t c = 0; c < count.size(); ++c) {
      if (count[c] > 1) return static_cast<int>(c);
    }
    return -1;
  }

  static Colors individualize(Colors colors, int a, int b) {
    const int fresh = *std::max_element(colors.begin(), colors.end()) + 1;
    colors[static_cast<std::size_t>(a)] = fresh;
    colors[static_cast<std::size_t>(b)] = fresh;
    return colors;
  }

  std::optional<VertexMapping> search(const Colors& start) const {
    Colors colors = refine(start);
    if (!balanced(colors)) return std::nullopt;
    const int cell = target_cell(colors);
    if (cell < 0) return leaf(colors);
    int v = 0;
    while (colors[static_cast<std::size_t>(v)] != cell) ++v;
    for (std::size_t w = static_cast<std::size_t>(offset_); w < colors.size(); ++w) {
      if (colors[w] != cell) continue;
      if (auto found = search(individualize(colors, v, static_cast<int>(w)))) return found;
    }
    return std::nullopt;
  }

 private:
  static int count_classes(const Colors& colors) {
    std::set<int> distinct(colors.begin(), colors.end());
    return static_cast<int>(distinct.size());
  }

  std::optional<VertexMapping> leaf(const Colors& colors) const {
    std::vector<int> by_color(colors.size() + 1, -1);
    for (std::size_t w = static_cast<std::size_t>(offset_); w < colors.size(); ++w) {
      by_color[static_cast<std::size_t>(colors[w])] = static_cast<int>(w) - offset_;
    }
    VertexMapping m;
    for (int v = 0; v < offset_; ++v) m.image.push_back(by_color[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])]);
    if (verify_mapping(g_, h_, m)) return m;
    return std::nullopt;
  }

  const Graph& g_;
  const Graph& h_;
  int offset_;
  std::vector<std::vector<int>> adj_;
};

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<int> sorted_triangle_counts(const Graph& g) {
  std::vector<int> t(static_cast<std::size_t>(g.order()), 0);
  for (const auto& e : g.edges()) {
    for (int w : g.neighbors(e.u)) {
      if (w > e.v && g.has_edge(e.v, w)) {
        ++t[static_cast<std::size_t>(e.u)];
        ++t[static_cast<std::size_t>(e.v)];
        ++t[static_cast<std::size_t>(w)];
      }
    }
  }
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

std::optional<VertexMapping> are_isomorphic(const Graph& g, const Graph& h, const IsoBudget& budget) {
  if (g.order() > budget.max_vertices || h.order() > budget.max_vertices) {
    throw Error(ErrorCode::kResource, "are_isomorphic: order exceeds budget " + std::to_string(budget.max_vertices));
  }
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (sorted_degrees(g) != sorted_degrees(h)) return std::nullopt;
  if (sorted_triangle_counts(g) != sorted_triangle_counts(h)) return std::nullopt;
  if (g.order() == 0) return VertexMapping{};

  JointRefiner refiner(g, h);
  auto found = refiner.search(Colors(refiner.total(), 0));
  if (found && !verify_mapping(g, h, *found)) {
    throw std::logic_error("isomorphism search returned an invalid witness");
  }
  return found;
}

AutGroupSummary automorphism_count(const Graph& g, int max_vertices) {
  if (g.order() > max_vertices) {
    throw Error(ErrorCode::kResource, "automorphism_count: order " + std::to_string(g.order()) +
                                          " exceeds budget " + std::to_string(max_vertices));
  }
  AutGroupSummary out;
  const int n = g.order();
  JointRefiner refiner(g, g);
  Colors colors(refiner.total(), 0);

  // |Stab(v_1..v_i)| = |orbit of v_{i+1} under Stab(v_1..v_i)| * |Stab(v_1..v_{i+1})|.
  for (;;) {
    colors = refiner.refine(colors);
    const int cell = refiner.target_cell(colors);
    if (cell < 0) break;
    int v = 0;
    while (colors[static_cast<std::size_t>(v)] != cell) ++v;
    std::uint64_t orbit = 0;
    for (int w = 0; w < n; ++w) {
      if (colors[static_cast<std::size_t>(n + w)] != cell) continue;
      if (w == v) {
        ++orbit;
        continue;
      }
      if (auto m = refiner.search(JointRefiner::individualize(colors, v, n + w))) {
        ++orbit;
        out.generators.push_back(std::move(*m));
      }
    }
    if (out.order > std::numeric_limits<std::uint64_t>::max() / orbit) {
      throw Error(ErrorCode::kResource, "automorphism group order overflows 64 bits");
    }
    out.order *= orbit;
    colors = JointRefiner::individualize(colors, v, n + v);
  }

  for (const auto& gen : out.generators) {
    if (!verify_mapping(g, g, gen)) throw std::logic_error("generator is not an automorphism");
  }

  if (out.order <= kMaxEnumeratedGroup) {
    std::set<std::vector<int>> elements{VertexMapping::identity(n).image};
    std::vector<VertexMapping> frontier{VertexMapping::identity(n)};
    while (!frontier.empty() && elements.size() <= out.order) {
      std::vector<VertexMapping> next;
      for (const auto& x : frontier) {
        for (const auto& gen : out.generators) {
          auto y = gen.compose(x);
          if (elements.insert(y.image).second) next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
    out.closure_checked = elements.size() == out.order;
    if (!out.closure_checked) throw std::logic_error("generated group size disagrees with orbit count");
    for (const auto& e : elements) out.element_orders.push_back(permutation_order(VertexMapping{e}));
    std::sort(out.element_orders.begin(), out.element_orders.end());
  }
  return out;
}

}  // namespace tokgraph
