#ifndef CWTK_GRAPH6_HPP
#define CWTK_GRAPH6_HPP

#include "cwtk/graph.hpp"

#include <string>

namespace cwtk {

// Standard graph6 encoding: 6-bit packed upper triangle, column-major.
// parse_graph6 tolerates and strips the optional ">>graph6<<" header and
// trailing newline; errors report the offending byte offset.
Graph parse_graph6(const std::string& text);
std::string serialize_graph6(const Graph& g);

} // namespace cwtk

#endif
