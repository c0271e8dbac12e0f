#include "tokgraph/graph_io.hpp"

#include <sstream>

#include "tokgraph/error.hpp"
#include "tokgraph/invariants.hpp"

namespace tokgraph {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError(i, "unexpected end of graph6 data");
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError(i, "byte outside graph6 range");
    return c - kBias;
  };

  long long n = 0;
  if (pos >= text.size()) throw ParseError(pos, "missing length prefix");
  if (text[pos] != '~') {
    n = byte_at(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | byte_at(pos + 2 + i);
    if (n <= 258047) throw ParseError(pos, "non-canonical 8-byte length prefix");
    pos += 8;
  } else {
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos + 1 + i);
    if (n <= 62) throw ParseError(pos, "non-canonical 4-byte length prefix");
    pos += 4;
  }
  if (n > 100000) throw ParseError(pos, "graph too large for dense representation");

  const long long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != body) {
    throw ParseError(text.size() < pos + body ? text.size() : pos + body,
                     "expected " + std::to_string(body) + " body bytes, found " +
                         std::to_string(text.size() - pos));
  }

  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = byte_at(pos + static_cast<std::size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad_mask = (1 << (6 - k % 6)) - 1;
    if (byte_at(last) & pad_mask) throw ParseError(last, "non-zero padding bits");
  }
  return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  } else {
    out.append("~~");
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string emit_dot(const Graph& g, const DotOptions& options) {
  std::ostringstream os;
  os << "graph " << quoted(options.name) << " {\n";
  auto node_line = [&](int u, const char* indent) {
    os << indent << (u + 1) << " [label=" << quoted(g.label(u)) << "];\n";
  };
  if (options.cluster_components) {
    int index = 0;
    for (const auto& comp : connected_components(g)) {
      os << "  subgraph cluster_" << index++ << " {\n";
      for (int u : comp) node_line(u, "    ");
      os << "  }\n";
    }
  } else {
    for (int u = 0; u < g.order(); ++u) node_line(u, "  ");
  }
  for (const auto& e : g.edges()) os << "  " << (e.u + 1) << " -- " << (e.v + 1) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tokgraph
