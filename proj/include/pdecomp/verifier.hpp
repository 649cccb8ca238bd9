#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdecomp/decomposer.hpp"
#include "pdecomp/graph.hpp"

namespace pdecomp {

struct CheckResult {
  bool ok = true;
  std::string message;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string message) { return {false, std::move(message)}; }
  explicit operator bool() const { return ok; }
};

/// Disjoint, covering, no empty clusters, cluster_of consistent.
CheckResult check_partition(const WeightedGraph& g, const Partition& part);

/// Every cluster has d_G-diameter <= 4 delta / 5.
CheckResult check_cluster_diameters(const WeightedGraph& g, const Partition& part, double delta);

/// Max recursion depth <= ceil(log2 n).
CheckResult check_recursion_depth(const CenterSequence& centers, std::size_t n);

/// Every vertex lies on exactly one separator path of the recursion and some
/// net point of that path is within delta/4 of it along the path.
CheckResult check_coverage_certificate(const WeightedGraph& g, const CenterSequence& centers,
                                       double delta);

/// 4 * p_eff * max(1, ceil(log2 n)).
std::size_t threatener_bound(std::size_t p_eff, std::size_t n);

struct ThreatenerCount {
  VertexId vertex = kNoVertex;
  std::size_t count = 0;
  std::size_t bound = 0;
  bool ok() const { return count >= 1 && count <= bound; }
};

/// Centers t whose largest possible ball (radius 2 delta/5 in G_t) meets
/// B_G(x, gamma delta).
ThreatenerCount count_threateners(const WeightedGraph& g, const CenterSequence& centers,
                                  const DecompositionParams& params, VertexId x, double gamma);

struct ThreatenerReport {
  std::vector<ThreatenerCount> per_vertex;
  std::size_t max_count = 0;
  std::size_t bound = 0;
  bool ok = true;
};

/// count_threateners for every vertex, sharing the per-center balls.
ThreatenerReport threatener_report(const WeightedGraph& g, const CenterSequence& centers,
                                   const DecompositionParams& params, double gamma);

/// One-sided Wilson score lower bound for a binomial proportion.
double wilson_lower_bound(std::size_t successes, std::size_t trials, double z);

/// z for a one-sided 99% bound.
inline constexpr double kZ99 = 2.3263478740408408;

struct PaddingRecord {
  VertexId vertex = kNoVertex;
  double gamma = 0.0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double empirical = 0.0;
  double wilson_lb = 0.0;
  double floor = 0.0;  // 2^{-beta gamma}
  bool pass = false;
};

struct PaddingReport {
  std::vector<double> gammas;
  double beta = 0.0;
  std::size_t trials = 0;
  std::vector<PaddingRecord> records;  // vertex-major, gammas in input order
  bool pass = true;

  /// Smallest beta' with empirical >= 2^{-beta' gamma} for every record
  /// with gamma > 0; infinity when some probability is zero.
  double fitted_beta() const;
};

using PartitionSampler = std::function<Partition(std::uint64_t seed)>;

/// Vertices whose padding is measured: all of them when n <= limit,
/// otherwise `limit` vertices drawn without replacement from `seed`, sorted.
std::vector<VertexId> padding_vertices(std::size_t n, std::uint64_t seed, std::size_t limit = 256);

/// Monte Carlo padding estimate for any partition sampler. Trial i uses
/// derive_seed(seed, i); the report depends only on the arguments.
PaddingReport estimate_padding(const WeightedGraph& g, double delta,
                               const PartitionSampler& sampler, double beta,
                               std::span<const double> gammas, std::size_t trials,
                               std::uint64_t seed, std::span<const VertexId> vertices);

/// The shortest-path-separator scheme with beta = beta_bound(p_eff, n).
PaddingReport estimate_padding(const WeightedGraph& g, double delta, const SeparatorFinder& finder,
                               std::span<const double> gammas, std::size_t trials,
                               std::uint64_t seed);

}  // namespace pdecomp
