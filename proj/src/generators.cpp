#include "pdecomp/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pdecomp/errors.hpp"
#include "pdecomp/sampler.hpp"

namespace pdecomp {
namespace {

double draw_weight(WeightMode mode, RngStream& rng) {
  return mode == WeightMode::kUnit ? 1.0 : 1.0 + rng.next_uniform();
}

}  // namespace

WeightMode parse_weight_mode(std::string_view name) {
  if (name == "unit") return WeightMode::kUnit;
  if (name == "uniform") return WeightMode::kUniform;
  throw ParameterError("unknown weight mode '" + std::string(name) + "' (expected unit|uniform)");
}

std::string_view to_string(WeightMode mode) {
  return mode == WeightMode::kUnit ? "unit" : "uniform";
}

WeightedGraph gen_grid(std::size_t rows, std::size_t cols, WeightMode mode, std::uint64_t seed) {
  if (rows == 0 || cols == 0) throw ParameterError("gen_grid: rows and cols must be >= 1");
  RngStream rng(seed);
  std::vector<Edge> edges;
  edges.reserve(2 * rows * cols);
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), draw_weight(mode, rng)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), draw_weight(mode, rng)});
    }
  }
  return WeightedGraph::from_edges(rows * cols, std::move(edges));
}

KTree gen_ktree(std::size_t n, std::size_t k, WeightMode mode, std::uint64_t seed, double keep) {
  if (k < 1 || n <= k) throw ParameterError("gen_ktree: need n > k >= 1");
  if (!(keep > 0.0 && keep <= 1.0)) throw ParameterError("gen_ktree: keep must lie in (0, 1]");

  RngStream rng(seed);
  std::vector<Edge> edges;
  auto add_edge = [&](VertexId u, VertexId v, bool required) {
    if (required || keep >= 1.0 || rng.next_uniform() < keep) {
      edges.push_back({u, v, draw_weight(mode, rng)});
    }
  };

  for (VertexId u = 0; u <= k; ++u) {
    for (VertexId v = u + 1; v <= k; ++v) add_edge(u, v, v == u + 1);
  }

  // Every k-subset of the seed clique, then k new cliques per added vertex.
  std::vector<std::vector<VertexId>> cliques;
  for (VertexId skip = 0; skip <= k; ++skip) {
    std::vector<VertexId> c;
    for (VertexId v = 0; v <= k; ++v) {
      if (v != skip) c.push_back(v);
    }
    cliques.push_back(std::move(c));
  }
  for (std::size_t i = k + 1; i < n; ++i) {
    const auto v = static_cast<VertexId>(i);
    const std::vector<VertexId> base = cliques[rng.next_below(cliques.size())];
    for (std::size_t a = 0; a < base.size(); ++a) add_edge(base[a], v, a == 0);
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      std::vector<VertexId> c;
      for (std::size_t a = 0; a < base.size(); ++a) {
        if (a != drop) c.push_back(base[a]);
      }
      c.push_back(v);
      cliques.push_back(std::move(c));
    }
  }

  std::vector<VertexId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<VertexId>(n - 1 - i);
  return {WeightedGraph::from_edges(n, std::move(edges)), k, std::move(order)};
}

WeightedGraph gen_tree(std::size_t n, WeightMode mode, std::uint64_t seed) {
  if (n == 1) return WeightedGraph::from_edges(1, {});
  return gen_ktree(n, 1, mode, seed).graph;
}

std::size_t elimination_width(const WeightedGraph& g, std::span<const VertexId> order) {
  const std::size_t n = g.n();
  if (order.size() != n) throw ParameterError("elimination order must list every vertex once");
  std::vector<std::set<VertexId>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<bool> gone(n, false);
  std::size_t width = 0;
  for (VertexId v : order) {
    if (v >= n || gone[v]) throw ParameterError("elimination order must list every vertex once");
    const std::vector<VertexId> live(adj[v].begin(), adj[v].end());
    width = std::max(width, live.size());
    for (VertexId a : live) {
      adj[a].erase(v);
      for (VertexId b : live) {
        if (a != b) adj[a].insert(b);
      }
    }
    adj[v].clear();
    gone[v] = true;
  }
  return width;
}

double weighted_diameter(const WeightedGraph& g) {
  const VertexMask all = VertexMask::full(g.n());
  if (g.n() <= 512) {
    double best = 0.0;
    for (std::size_t s = 0; s < g.n(); ++s) {
      const ShortestPathTree t = sssp(g, all, static_cast<VertexId>(s));
      best = std::max(best, *std::max_element(t.dist.begin(), t.dist.end()));
    }
    return best;
  }
  const VertexId a = farthest(g, all, 0).first;
  return farthest(g, all, a).second;
}

}  // namespace pdecomp
