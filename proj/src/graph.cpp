#include "pdecomp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <string>

#include "pdecomp/errors.hpp"

namespace pdecomp {
namespace {

using HeapEntry = std::pair<double, VertexId>;
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>>;

void require_alive(const VertexMask& mask, VertexId v, const char* what) {
  if (!mask.contains(v)) {
    throw PreconditionError(std::string(what) + ": vertex " + std::to_string(v) +
                            " is not alive in the mask");
  }
}

void require_universe(const WeightedGraph& g, const VertexMask& mask) {
  if (mask.universe() != g.n()) {
    throw PreconditionError("mask universe " + std::to_string(mask.universe()) +
                            " does not match graph size " + std::to_string(g.n()));
  }
}

}  // namespace

WeightedGraph WeightedGraph::from_edges(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw GraphFormatError("graph must have at least one vertex");
  if (n >= kNoVertex) throw GraphFormatError("too many vertices");

  WeightedGraph g;
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= n || e.v >= n) {
      throw GraphFormatError("edge " + std::to_string(i) + " has an endpoint outside [0, " +
                             std::to_string(n) + ")");
    }
    if (e.u == e.v) throw GraphFormatError("edge " + std::to_string(i) + " is a self-loop");
    if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
      throw GraphFormatError("edge " + std::to_string(i) + " has a negative or non-finite weight");
    }
    ++degree[e.u];
    ++degree[e.v];
  }

  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.arcs_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.arcs_[cursor[e.u]++] = {e.v, e.w};
    g.arcs_[cursor[e.v]++] = {e.u, e.w};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const Arc& a, const Arc& b) { return a.to != b.to ? a.to < b.to : a.w < b.w; });
  }
  g.edges_ = std::move(edges);

  if (components(g, VertexMask::full(n)).size() != 1) {
    throw GraphFormatError("graph is not connected");
  }
  return g;
}

std::optional<double> WeightedGraph::edge_weight(VertexId u, VertexId v) const {
  if (u >= n() || v >= n()) return std::nullopt;
  auto arcs = neighbors(u);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                             [](const Arc& a, VertexId target) { return a.to < target; });
  if (it == arcs.end() || it->to != v) return std::nullopt;
  return it->w;
}

VertexMask VertexMask::full(std::size_t n) {
  VertexMask m;
  m.bits_.assign(n, true);
  m.count_ = n;
  return m;
}

VertexMask VertexMask::empty(std::size_t n) {
  VertexMask m;
  m.bits_.assign(n, false);
  return m;
}

VertexMask VertexMask::of(std::size_t n, std::span<const VertexId> alive) {
  VertexMask m = empty(n);
  for (VertexId v : alive) m.insert(v);
  return m;
}

void VertexMask::insert(VertexId v) {
  if (v >= bits_.size()) throw ParameterError("vertex " + std::to_string(v) + " outside mask");
  if (!bits_[v]) {
    bits_[v] = true;
    ++count_;
  }
}

void VertexMask::erase(VertexId v) {
  if (v >= bits_.size()) throw ParameterError("vertex " + std::to_string(v) + " outside mask");
  if (bits_[v]) {
    bits_[v] = false;
    --count_;
  }
}

std::vector<VertexId> VertexMask::vertices() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

VertexId VertexMask::first() const {
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v]) return static_cast<VertexId>(v);
  }
  return kNoVertex;
}

bool VertexMask::is_subset_of(const VertexMask& other) const {
  if (universe() != other.universe()) return false;
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v] && !other.bits_[v]) return false;
  }
  return true;
}

Path ShortestPathTree::path_to(VertexId target) const {
  if (target >= dist.size() || !reached(target)) {
    throw PreconditionError("path_to: vertex " + std::to_string(target) + " is unreachable");
  }
  Path p;
  p.length = dist[target];
  for (VertexId v = target; v != kNoVertex; v = parent[v]) p.vertices.push_back(v);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

ShortestPathTree sssp(const WeightedGraph& g, const VertexMask& mask, VertexId src) {
  require_universe(g, mask);
  require_alive(mask, src, "sssp");

  ShortestPathTree t;
  t.source = src;
  t.dist.assign(g.n(), kInfinity);
  t.parent.assign(g.n(), kNoVertex);
  std::vector<bool> settled(g.n(), false);

  MinHeap heap;
  t.dist[src] = 0.0;
  heap.emplace(0.0, src);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = true;
    for (const Arc& a : g.neighbors(u)) {
      if (!mask.contains(a.to) || settled[a.to]) continue;
      double nd = d + a.w;
      // Equal-length relaxations prefer the smaller parent id.
      if (nd < t.dist[a.to] || (nd == t.dist[a.to] && u < t.parent[a.to])) {
        t.dist[a.to] = nd;
        t.parent[a.to] = u;
        heap.emplace(nd, a.to);
      }
    }
  }
  return t;
}

std::vector<VertexId> ball(const WeightedGraph& g, const VertexMask& mask, VertexId center,
                           double radius) {
  if (!(radius >= 0.0)) throw ParameterError("ball radius must be non-negative");
  BallSearch search(g);
  std::vector<VertexId> out;
  for (const Reach& r : search.run(mask, center, radius)) out.push_back(r.v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> components(const WeightedGraph& g, const VertexMask& mask) {
  require_universe(g, mask);
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(g.n(), false);
  std::vector<VertexId> stack;
  for (std::size_t s = 0; s < g.n(); ++s) {
    if (!mask.contains(static_cast<VertexId>(s)) || seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = true;
    stack.push_back(static_cast<VertexId>(s));
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (const Arc& a : g.neighbors(u)) {
        if (mask.contains(a.to) && !seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::pair<VertexId, double> farthest(const WeightedGraph& g, const VertexMask& mask, VertexId src) {
  ShortestPathTree t = sssp(g, mask, src);
  VertexId best = kNoVertex;
  double best_d = -1.0;
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (t.reached(static_cast<VertexId>(v)) && t.dist[v] > best_d) {
      best = static_cast<VertexId>(v);
      best_d = t.dist[v];
    }
  }
  return {best, best_d};
}

std::optional<double> walk_length(const WeightedGraph& g, std::span<const VertexId> vertices) {
  double len = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    auto w = g.edge_weight(vertices[i - 1], vertices[i]);
    if (!w) return std::nullopt;
    len += *w;
  }
  return len;
}

BallSearch::BallSearch(const WeightedGraph& g) : g_(&g), dist_(g.n(), kInfinity) {}

std::span<const Reach> BallSearch::run(VertexId src, double radius) {
  if (src >= g_->n()) throw PreconditionError("ball search source out of range");
  return search(nullptr, src, radius);
}

std::span<const Reach> BallSearch::run(const VertexMask& mask, VertexId src, double radius) {
  require_universe(*g_, mask);
  require_alive(mask, src, "ball search");
  return search(&mask, src, radius);
}

std::span<const Reach> BallSearch::search(const VertexMask* mask, VertexId src, double radius) {
  for (VertexId v : touched_) dist_[v] = kInfinity;
  touched_.clear();
  out_.clear();

  MinHeap heap;
  dist_[src] = 0.0;
  touched_.push_back(src);
  heap.emplace(0.0, src);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist_[u]) continue;
    if (d > radius) break;
    out_.push_back({u, d});
    for (const Arc& a : g_->neighbors(u)) {
      if (mask != nullptr && !mask->contains(a.to)) continue;
      double nd = d + a.w;
      if (nd < dist_[a.to]) {
        if (dist_[a.to] == kInfinity) touched_.push_back(a.to);
        dist_[a.to] = nd;
        heap.emplace(nd, a.to);
      }
    }
  }
  return out_;
}

int ceil_log2(std::size_t n) {
  int k = 0;
  std::size_t p = 1;
  while (p < n) {
    p <<= 1;
    ++k;
  }
  return k;
}

}  // namespace pdecomp
