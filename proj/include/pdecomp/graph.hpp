#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pdecomp {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Edge {
  VertexId u;
  VertexId v;
  double w;
};

struct Arc {
  VertexId to;
  double w;
};

/// Immutable, connected, undirected graph with non-negative edge weights.
///
/// Adjacency is stored in CSR form with each vertex's arcs sorted by
/// (neighbour, weight). Construction validates every invariant and throws
/// GraphFormatError on failure, so a WeightedGraph value is always usable as
/// a metric.
class WeightedGraph {
 public:
  static WeightedGraph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const { return offsets_.size() - 1; }
  std::size_t m() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Arc> neighbors(VertexId v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }

  /// Lightest edge between u and v, if adjacent.
  std::optional<double> edge_weight(VertexId u, VertexId v) const;

 private:
  WeightedGraph() = default;

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> arcs_;
};

/// The alive vertex set of a residual subgraph G \ D.
class VertexMask {
 public:
  VertexMask() = default;

  static VertexMask full(std::size_t n);
  static VertexMask empty(std::size_t n);
  static VertexMask of(std::size_t n, std::span<const VertexId> alive);

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(VertexId v) const { return v < bits_.size() && bits_[v]; }

  void insert(VertexId v);
  void erase(VertexId v);

  /// Alive vertices in increasing id order.
  std::vector<VertexId> vertices() const;
  VertexId first() const;

  bool is_subset_of(const VertexMask& other) const;

  friend bool operator==(const VertexMask&, const VertexMask&) = default;

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

struct Path {
  std::vector<VertexId> vertices;
  double length = 0.0;
};

struct ShortestPathTree {
  VertexId source = kNoVertex;
  std::vector<double> dist;
  std::vector<VertexId> parent;

  bool reached(VertexId v) const { return dist[v] != kInfinity; }
  /// Path source -> target along parent pointers. Throws if target is unreachable.
  Path path_to(VertexId target) const;
};

/// Dijkstra from src inside the residual graph induced by mask.
ShortestPathTree sssp(const WeightedGraph& g, const VertexMask& mask, VertexId src);

/// Closed ball { v alive : d_mask(center, v) <= radius }, sorted by id.
std::vector<VertexId> ball(const WeightedGraph& g, const VertexMask& mask, VertexId center,
                           double radius);

/// Connected components of the residual graph, ordered by smallest member.
/// Each component is sorted by id.
std::vector<std::vector<VertexId>> components(const WeightedGraph& g, const VertexMask& mask);

/// Vertex at maximal residual distance from src; ties go to the smallest id.
std::pair<VertexId, double> farthest(const WeightedGraph& g, const VertexMask& mask, VertexId src);

/// Sum of lightest edge weights along consecutive vertices, or nullopt if
/// some consecutive pair is not adjacent.
std::optional<double> walk_length(const WeightedGraph& g, std::span<const VertexId> vertices);

struct Reach {
  VertexId v;
  double d;
};

/// Bounded Dijkstra with scratch storage reused across queries.
///
/// Results are ordered by (distance, id) and stay valid until the next call
/// to run(). Not thread-safe; give each thread its own instance.
class BallSearch {
 public:
  explicit BallSearch(const WeightedGraph& g);

  std::span<const Reach> run(VertexId src, double radius);
  std::span<const Reach> run(const VertexMask& mask, VertexId src, double radius);

 private:
  std::span<const Reach> search(const VertexMask* mask, VertexId src, double radius);

  const WeightedGraph* g_;
  std::vector<double> dist_;
  std::vector<VertexId> touched_;
  std::vector<Reach> out_;
};

/// ceil(log2(n)) for n >= 1; 0 for n <= 1.
int ceil_log2(std::size_t n);

}  // namespace pdecomp
