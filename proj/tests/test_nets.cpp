#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "pdecomp/errors.hpp"
#include "pdecomp/nets.hpp"

using namespace pdecomp;

namespace {

PathMetricView unit_path(std::size_t n) {
  std::vector<VertexId> vs(n);
  std::iota(vs.begin(), vs.end(), VertexId{0});
  const std::vector<double> steps(n - 1, 1.0);
  return PathMetricView(std::move(vs), steps);
}

// Brute-force packing / covering / size checks over every pair of positions.
void check_net(const PathMetricView& view, double r) {
  const auto net = greedy_net_positions(view, r);
  REQUIRE_FALSE(net.empty());
  CHECK(net.front() == 0);
  for (std::size_t a = 0; a < net.size(); ++a) {
    if (a > 0) CHECK(net[a - 1] < net[a]);
    for (std::size_t b = a + 1; b < net.size(); ++b) CHECK(view.distance(net[a], net[b]) > r);
  }
  for (std::size_t i = 0; i < view.size(); ++i) {
    bool covered = false;
    for (std::size_t p : net) covered = covered || view.distance(i, p) <= r;
    CHECK(covered);
  }
  if (r > 0.0) CHECK(net.size() <= static_cast<std::size_t>(std::floor(view.length() / r)) + 1);
}

}  // namespace

TEST_CASE("single-vertex path") {
  const PathMetricView view(std::vector<VertexId>{7}, std::span<const double>{});
  CHECK(greedy_net(view, 0.0) == std::vector<VertexId>{7});
  CHECK(greedy_net(view, 5.0) == std::vector<VertexId>{7});
  CHECK(view.length() == 0.0);
}

TEST_CASE("unit path v0..v5 with r = 2") {
  CHECK(greedy_net(unit_path(6), 2.0) == std::vector<VertexId>{0, 3});
}

TEST_CASE("r = 0 keeps every vertex") {
  const std::vector<double> steps{0.5, 2.0, 0.25, 1.0};
  const PathMetricView view({4, 1, 9, 2, 6}, steps);
  CHECK(greedy_net(view, 0.0) == std::vector<VertexId>{4, 1, 9, 2, 6});
}

TEST_CASE("path view from a graph path") {
  const WeightedGraph g = WeightedGraph::from_edges(4, {{0, 1, 1.5}, {1, 2, 0.5}, {2, 3, 2.0}});
  const PathMetricView view(g, Path{{3, 2, 1, 0}, 4.0});
  CHECK(view.cumulative(0) == 0.0);
  CHECK(view.cumulative(2) == 2.5);
  CHECK(view.length() == 4.0);
  CHECK(view.distance(3, 1) == 2.0);
  CHECK(greedy_net(view, 1.0) == std::vector<VertexId>{3, 2, 0});
}

TEST_CASE("errors") {
  const PathMetricView empty(std::vector<VertexId>{}, std::span<const double>{});
  CHECK_THROWS_AS(greedy_net(empty, 1.0), ParameterError);
  CHECK_THROWS_AS(greedy_net_positions(unit_path(3), -1.0), ParameterError);
  const WeightedGraph g = WeightedGraph::from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  CHECK_THROWS(PathMetricView(g, Path{{0, 2}, 2.0}));
}

TEST_CASE("property: packing, covering and size on random weighted paths") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::size_t> len(1, 40);
  std::uniform_real_distribution<double> w(0.0, 3.0);
  std::uniform_real_distribution<double> rr(0.0, 6.0);
  for (int it = 0; it < 2000; ++it) {
    const std::size_t n = len(rng);
    std::vector<VertexId> vs(n);
    std::iota(vs.begin(), vs.end(), VertexId{0});
    std::vector<double> steps(n - 1);
    for (double& s : steps) s = (rng() % 8 == 0) ? 0.0 : w(rng);
    const PathMetricView view(std::move(vs), steps);
    check_net(view, rr(rng));
    check_net(view, 0.0);
  }
}
