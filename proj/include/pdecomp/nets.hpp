#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pdecomp/graph.hpp"

namespace pdecomp {

/// The internal metric of a path: distance(i, j) = |cumulative[i] - cumulative[j]|.
class PathMetricView {
 public:
  /// Step weights are taken from the graph (lightest parallel edge).
  PathMetricView(const WeightedGraph& g, const Path& path);
  /// steps[i] is the weight between vertices[i] and vertices[i+1].
  PathMetricView(std::vector<VertexId> vertices, std::span<const double> steps);

  std::size_t size() const { return vertices_.size(); }
  VertexId vertex(std::size_t i) const { return vertices_[i]; }
  double cumulative(std::size_t i) const { return cumulative_[i]; }
  double length() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }
  double distance(std::size_t i, std::size_t j) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<double> cumulative_;
};

/// Positions (into the view) of the greedy r-net, scanning from the first
/// endpoint: a vertex joins iff it is farther than r from every net point
/// chosen so far.
std::vector<std::size_t> greedy_net_positions(const PathMetricView& view, double r);

std::vector<VertexId> greedy_net(const PathMetricView& view, double r);

}  // namespace pdecomp
