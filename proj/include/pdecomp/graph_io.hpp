#pragma once

#include <iosfwd>
#include <string>

#include "pdecomp/graph.hpp"

namespace pdecomp {

// Edge-list text format:
//
//   # comment
//   n m
//   u v w      (m lines, 0-based ids, decimal weight)
//
// '#' starts a comment anywhere on a line; blank lines are ignored.
WeightedGraph read_graph(std::istream& in);
WeightedGraph load_graph(const std::string& path);

void write_graph(std::ostream& out, const WeightedGraph& g);

}  // namespace pdecomp
