#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdecomp/graph.hpp"

namespace pdecomp {

/// P_j: one or more shortest paths of the residual graph G_j, where
/// residual_before is the alive set of G_j (the node's mask minus every
/// earlier group's vertices).
struct SeparatorGroup {
  std::vector<Path> paths;
  VertexMask residual_before;
};

/// A balanced shortest-path separator of one residual graph.
struct PathSeparator {
  std::vector<SeparatorGroup> groups;
  std::vector<VertexId> separator_vertices;  // sorted union of all path vertices
  std::vector<VertexMask> flaps;             // components of residual minus S
  std::size_t total_paths = 0;
};

enum class SeparatorViolationKind {
  kMalformed,
  kMaskChain,
  kPathNotAlive,
  kPathNotWalk,
  kNotShortest,
  kVertexSetMismatch,
  kFlapMismatch,
  kUnbalanced,
};

struct SeparatorViolation {
  SeparatorViolationKind kind;
  std::size_t group = 0;
  std::size_t path = 0;
  VertexId vertex = kNoVertex;
  std::string message;
};

std::string_view to_string(SeparatorViolationKind kind);

/// Checks the separator certificate against (g, mask): shortest-path
/// equality per group, mask chaining, flap structure and balance
/// (every flap <= floor(|alive| / 2)). Returns the first violation found.
std::optional<SeparatorViolation> validate_separator(const WeightedGraph& g,
                                                     const VertexMask& mask,
                                                     const PathSeparator& sep);

/// Repeatedly deletes an approximate-diameter shortest path from the
/// oversized component until it is balanced. One path per group.
PathSeparator greedy_find(const WeightedGraph& g, const VertexMask& mask);

/// Exact single-vertex separator of a tree. Throws PreconditionError when the
/// residual graph is not a tree.
PathSeparator tree_centroid_find(const WeightedGraph& g, const VertexMask& mask);

using SeparatorFinder = std::function<PathSeparator(const WeightedGraph&, const VertexMask&)>;

enum class FinderKind { kGreedy, kTreeCentroid };

SeparatorFinder make_finder(FinderKind kind);
FinderKind parse_finder(std::string_view name);
std::string_view to_string(FinderKind kind);

/// Audit dump: one line `group j: v_a v_b ... v_z` per path.
void write_separator(std::ostream& out, const PathSeparator& sep);

}  // namespace pdecomp
