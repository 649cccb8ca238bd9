#include "pdecomp/nets.hpp"

#include <cmath>
#include <string>

#include "pdecomp/errors.hpp"

namespace pdecomp {

PathMetricView::PathMetricView(const WeightedGraph& g, const Path& path)
    : vertices_(path.vertices) {
  cumulative_.reserve(vertices_.size());
  if (vertices_.empty()) return;
  cumulative_.push_back(0.0);
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    auto w = g.edge_weight(vertices_[i - 1], vertices_[i]);
    if (!w) {
      throw PreconditionError("path vertices " + std::to_string(vertices_[i - 1]) + " and " +
                              std::to_string(vertices_[i]) + " are not adjacent");
    }
    cumulative_.push_back(cumulative_.back() + *w);
  }
}

PathMetricView::PathMetricView(std::vector<VertexId> vertices, std::span<const double> steps)
    : vertices_(std::move(vertices)) {
  if (!vertices_.empty() && steps.size() + 1 != vertices_.size()) {
    throw ParameterError("path view needs exactly one step weight per consecutive pair");
  }
  if (vertices_.empty()) return;
  cumulative_.push_back(0.0);
  for (double w : steps) {
    if (!(w >= 0.0)) throw ParameterError("path step weights must be non-negative");
    cumulative_.push_back(cumulative_.back() + w);
  }
}

double PathMetricView::distance(std::size_t i, std::size_t j) const {
  return std::abs(cumulative_[i] - cumulative_[j]);
}

std::vector<std::size_t> greedy_net_positions(const PathMetricView& view, double r) {
  if (view.size() == 0) throw ParameterError("greedy_net: empty path");
  if (!(r >= 0.0)) throw ParameterError("greedy_net: r must be non-negative");

  // Cumulative distances are monotone along the path, so the nearest earlier
  // net point is always the last one added.
  std::vector<std::size_t> net{0};
  for (std::size_t i = 1; i < view.size(); ++i) {
    if (view.distance(i, net.back()) > r) net.push_back(i);
  }
  return net;
}

std::vector<VertexId> greedy_net(const PathMetricView& view, double r) {
  std::vector<VertexId> out;
  for (std::size_t i : greedy_net_positions(view, r)) out.push_back(view.vertex(i));
  return out;
}

}  // namespace pdecomp
