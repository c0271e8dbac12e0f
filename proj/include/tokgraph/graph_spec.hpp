#pragma once

#include <string_view>

#include "tokgraph/graph.hpp"

namespace tokgraph {

/// Reads a command-line graph description:
///   path:<n> | cycle:<n> | complete:<n> | star:<n>
///   union:<spec>+<spec>[+...]      (left-to-right disjoint union)
///   <graph6 text> | <path to a file whose first line is graph6>
Graph parse_graph_spec(std::string_view spec);

}  // namespace tokgraph
