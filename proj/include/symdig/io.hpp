#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "symdig/base.hpp"
#include "symdig/digraph.hpp"

namespace symdig {

/// Edge-list format:
///   # vertices N directed {true|false}
///   # label i <label>     (one line per vertex when labeled)
///   u v                   (one arc per line, 0-based, lexicographic)
void write_edgelist(std::ostream& os, const Digraph& g);

/// Parses the edge-list format back into a digraph. Labels are split on
/// '|' and re-indexed against an alphabet built in order of first use.
Digraph read_edgelist(std::istream& is);

/// DOT output: '->' arcs for directed graphs, each symmetric pair rendered
/// once as '--' when the arc set is symmetric.
void write_dot(std::ostream& os, const Digraph& g);

nlohmann::ordered_json graph_json(const Digraph& g);

/// Block map lines "index: member, member, ...".
void write_blocks(std::ostream& os, const std::vector<std::vector<Vertex>>& blocks);

}  // namespace symdig
