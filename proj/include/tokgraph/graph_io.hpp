#pragma once

#include <string>
#include <string_view>

#include "tokgraph/graph.hpp"

namespace tokgraph {

/// Decodes one standard graph6 record. An optional ">>graph6<<" header and
/// a trailing line break are accepted. Throws ParseError on a bad length
/// prefix, a wrong body length, non-zero padding bits or bytes outside 63..126.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6 without header or newline.
std::string emit_graph6(const Graph& g);

struct DotOptions {
  std::string name = "G";
  /// Wrap every connected component in its own "subgraph cluster_i".
  bool cluster_components = false;
};

/// Undirected DOT text. Nodes are written as 1-based ids with the graph's
/// labels (or the id) as the node label, one node or edge per line.
std::string emit_dot(const Graph& g, const DotOptions& options = {});

}  // namespace tokgraph
