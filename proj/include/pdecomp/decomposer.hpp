#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pdecomp/graph.hpp"
#include "pdecomp/separators.hpp"

namespace pdecomp {

using ClusterId = std::uint32_t;
inline constexpr ClusterId kNoCluster = std::numeric_limits<ClusterId>::max();

/// One separator path visited by the recursion, with the residual graph G_j
/// of its group.
struct SeparatorPathRecord {
  Path path;
  std::shared_ptr<const VertexMask> subgraph;
  int depth = 0;
};

/// (c_j, G_j) plus provenance.
struct CenterRecord {
  VertexId center = kNoVertex;
  std::shared_ptr<const VertexMask> subgraph;
  std::size_t order = 0;
  int depth = 0;
  std::size_t path_id = 0;  // index into CenterSequence::paths
};

struct CenterSequence {
  std::vector<CenterRecord> records;
  std::vector<SeparatorPathRecord> paths;
  std::size_t p_eff = 0;      // max total_paths over recursion nodes
  int max_depth = 0;
  std::size_t node_count = 0;  // recursion nodes (finder invocations)
};

/// Called once per recursion node with the node's alive set, the separator
/// the finder returned and the node depth.
using SeparatorObserver =
    std::function<void(const VertexMask& node, const PathSeparator& sep, int depth)>;

/// Deterministic center/subgraph sequence. At every recursion node the
/// finder's groups are emitted in order, each path contributing its greedy
/// delta/4-net (in path order) paired with the group's residual graph; the
/// flaps are then processed depth-first, in component order.
CenterSequence choose_centers(const WeightedGraph& g, double delta, const SeparatorFinder& finder,
                              const SeparatorObserver& observer = {});

struct DecompositionParams {
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::size_t p_eff = 1;
  double K = 2.0;
  double lambda = 0.0;
};

/// K = max(2, 9 * p_eff * ceil(log2 n)); lambda = delta / (10 ln K).
DecompositionParams make_params(double delta, std::uint64_t seed, std::size_t p_eff, std::size_t n);

/// 40 ln K / ln 2 with K as in make_params.
double beta_bound(std::size_t p_eff, std::size_t n);

struct Cluster {
  std::vector<VertexId> vertices;  // sorted
  VertexId center = kNoVertex;
  std::size_t center_order = 0;  // position of the owning center in its sequence
  double radius = 0.0;
};

struct Partition {
  std::vector<ClusterId> cluster_of;
  std::vector<Cluster> clusters;
};

/// Per-center balls of radius 2*delta/5 in each center's subgraph, computed
/// once and reused by every carve over the same center sequence.
///
/// Only the prefix of centers that can ever be reached is kept: every radius
/// is at least delta/4, so once the delta/4-balls of the prefix cover V no
/// later center can claim anything.
class CarvePlan {
 public:
  CarvePlan(const WeightedGraph& g, const CenterSequence& centers, double delta);

  std::size_t n() const { return n_; }
  double delta() const { return delta_; }
  /// Number of centers kept (a prefix of the sequence).
  std::size_t size() const { return centers_.size(); }
  std::size_t sequence_size() const { return sequence_size_; }
  VertexId center(std::size_t j) const { return centers_[j]; }
  std::span<const Reach> reach(std::size_t j) const {
    return {reach_.data() + offsets_[j], reach_.data() + offsets_[j + 1]};
  }

 private:
  std::size_t n_;
  double delta_;
  std::size_t sequence_size_;
  std::vector<VertexId> centers_;
  std::vector<std::size_t> offsets_;
  std::vector<Reach> reach_;
};

/// Ball carving in sequence order: R_j is the texp quantile of the j-th
/// uniform of RngStream(params.seed) on [delta/4, 2 delta/5].
Partition carve(const CarvePlan& plan, const DecompositionParams& params);
Partition carve(const WeightedGraph& g, const CenterSequence& centers,
                const DecompositionParams& params);

/// Reusable sampler for the shortest-path-separator scheme on a fixed
/// (graph, delta): the center sequence and plan are built once.
class PaperDecomposer {
 public:
  PaperDecomposer(const WeightedGraph& g, double delta, const SeparatorFinder& finder,
                  const SeparatorObserver& observer = {});

  const CenterSequence& centers() const { return centers_; }
  const CarvePlan& plan() const { return plan_; }
  DecompositionParams params(std::uint64_t seed) const;
  double beta() const;
  Partition sample(std::uint64_t seed) const;

 private:
  std::size_t n_;
  double delta_;
  CenterSequence centers_;
  CarvePlan plan_;
};

Partition decompose(const WeightedGraph& g, double delta, std::uint64_t seed,
                    const SeparatorFinder& finder);

/// Ordered ball carving in the full graph with every vertex a center, in a
/// uniformly random order; radii texp on [delta/4, 2 delta/5] with
/// lambda = delta / (10 ln n).
class BaselineDecomposer {
 public:
  BaselineDecomposer(const WeightedGraph& g, double delta);
  BaselineDecomposer(WeightedGraph&&, double) = delete;

  double lambda() const { return lambda_; }
  /// 40 ln max(2, n) / ln 2: the same closed form with n threateners.
  double beta() const;
  Partition sample(std::uint64_t seed) const;

 private:
  const WeightedGraph* g_;
  double delta_;
  double lambda_;
};

Partition baseline_decompose(const WeightedGraph& g, double delta, std::uint64_t seed);

/// Partition dump: a `key=value` metadata line, then `cluster_id vertex_id`
/// lines, clusters in carve order and vertices ascending.
void write_partition(std::ostream& out, const Partition& part, const std::string& metadata);
std::string partition_metadata(const DecompositionParams& params, double beta);

}  // namespace pdecomp
