#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pdecomp/graph.hpp"

namespace pdecomp {

enum class WeightMode { kUnit, kUniform };  // uniform: weights in [1, 2)

WeightMode parse_weight_mode(std::string_view name);
std::string_view to_string(WeightMode mode);

/// rows x cols grid, vertex (r, c) has id r * cols + c.
WeightedGraph gen_grid(std::size_t rows, std::size_t cols, WeightMode mode, std::uint64_t seed);

struct KTree {
  WeightedGraph graph;
  std::size_t k;
  /// Reverse insertion order. Eliminating in this order never creates a
  /// vertex with more than k live neighbours, certifying treewidth <= k.
  std::vector<VertexId> elimination_order;
};

/// Random (partial) k-tree: a (k+1)-clique, then each new vertex joined to a
/// uniformly chosen existing k-clique. With keep < 1 every edge except one
/// per new vertex (and a spanning path of the seed clique) survives with
/// probability keep, so the graph stays connected.
KTree gen_ktree(std::size_t n, std::size_t k, WeightMode mode, std::uint64_t seed,
                double keep = 1.0);

/// Random tree (a 1-tree).
WeightedGraph gen_tree(std::size_t n, WeightMode mode, std::uint64_t seed);

/// Largest number of live neighbours met while eliminating vertices in
/// `order` (with fill-in). Throws unless order is a permutation of V.
std::size_t elimination_width(const WeightedGraph& g, std::span<const VertexId> order);

/// Exact for n <= 512 (all-pairs Dijkstra); a double-sweep lower bound above.
double weighted_diameter(const WeightedGraph& g);

}  // namespace pdecomp
