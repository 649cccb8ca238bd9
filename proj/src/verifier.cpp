#include "pdecomp/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pdecomp/errors.hpp"
#include "pdecomp/nets.hpp"
#include "pdecomp/sampler.hpp"

namespace pdecomp {
namespace {

void require_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 0.01)) {
    throw ParameterError("gamma must lie in [0, 1/100], got " + std::to_string(gamma));
  }
}

}  // namespace

CheckResult check_partition(const WeightedGraph& g, const Partition& part) {
  const std::size_t n = g.n();
  if (part.cluster_of.size() != n) {
    return CheckResult::fail("cluster_of has " + std::to_string(part.cluster_of.size()) +
                             " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<ClusterId> owner(n, kNoCluster);
  for (std::size_t c = 0; c < part.clusters.size(); ++c) {
    const auto& vs = part.clusters[c].vertices;
    if (vs.empty()) return CheckResult::fail("cluster " + std::to_string(c) + " is empty");
    for (VertexId v : vs) {
      if (v >= n) return CheckResult::fail("cluster " + std::to_string(c) + " names vertex " +
                                           std::to_string(v) + " outside the graph");
      if (owner[v] != kNoCluster) {
        return CheckResult::fail("vertex " + std::to_string(v) + " is in clusters " +
                                 std::to_string(owner[v]) + " and " + std::to_string(c));
      }
      owner[v] = static_cast<ClusterId>(c);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (owner[v] == kNoCluster) {
      return CheckResult::fail("vertex " + std::to_string(v) + " is in no cluster");
    }
    if (part.cluster_of[v] != owner[v]) {
      return CheckResult::fail("cluster_of[" + std::to_string(v) + "] disagrees with the clusters");
    }
  }
  return CheckResult::pass();
}

CheckResult check_cluster_diameters(const WeightedGraph& g, const Partition& part, double delta) {
  const double limit = 4.0 * delta / 5.0;
  BallSearch search(g);
  std::vector<ClusterId> member(g.n(), kNoCluster);
  for (std::size_t c = 0; c < part.clusters.size(); ++c) {
    const auto& vs = part.clusters[c].vertices;
    if (vs.size() < 2) continue;
    for (VertexId v : vs) member[v] = static_cast<ClusterId>(c);
    for (VertexId x : vs) {
      std::size_t seen = 0;
      for (const Reach& r : search.run(x, limit)) {
        if (member[r.v] == c) ++seen;
      }
      if (seen != vs.size()) {
        ShortestPathTree t = sssp(g, VertexMask::full(g.n()), x);
        VertexId far = x;
        for (VertexId y : vs) {
          if (t.dist[y] > t.dist[far]) far = y;
        }
        return CheckResult::fail("cluster " + std::to_string(c) + ": d_G(" + std::to_string(x) +
                                 ", " + std::to_string(far) + ") = " +
                                 std::to_string(t.dist[far]) + " > " + std::to_string(limit));
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_recursion_depth(const CenterSequence& centers, std::size_t n) {
  const int bound = ceil_log2(n);
  if (centers.max_depth > bound) {
    return CheckResult::fail("recursion depth " + std::to_string(centers.max_depth) + " > " +
                             std::to_string(bound));
  }
  return CheckResult::pass();
}

CheckResult check_coverage_certificate(const WeightedGraph& g, const CenterSequence& centers,
                                       double delta) {
  const double r = delta / 4.0;
  std::vector<std::size_t> occurrences(g.n(), 0);
  std::vector<std::vector<VertexId>> net_of(centers.paths.size());
  for (const CenterRecord& rec : centers.records) net_of[rec.path_id].push_back(rec.center);

  for (std::size_t pid = 0; pid < centers.paths.size(); ++pid) {
    const Path& path = centers.paths[pid].path;
    PathMetricView view(g, path);
    std::vector<std::size_t> net_pos;
    for (std::size_t i = 0; i < view.size(); ++i) {
      ++occurrences[view.vertex(i)];
      if (std::find(net_of[pid].begin(), net_of[pid].end(), view.vertex(i)) != net_of[pid].end()) {
        net_pos.push_back(i);
      }
    }
    for (std::size_t i = 0; i < view.size(); ++i) {
      bool covered = false;
      for (std::size_t p : net_pos) covered = covered || view.distance(i, p) <= r;
      if (!covered) {
        return CheckResult::fail("vertex " + std::to_string(view.vertex(i)) + " on path " +
                                 std::to_string(pid) + " has no net point within delta/4");
      }
    }
  }
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (occurrences[v] != 1) {
      return CheckResult::fail("vertex " + std::to_string(v) + " lies on " +
                               std::to_string(occurrences[v]) + " separator paths");
    }
  }
  return CheckResult::pass();
}

std::size_t threatener_bound(std::size_t p_eff, std::size_t n) {
  return 4 * p_eff * static_cast<std::size_t>(std::max(1, ceil_log2(n)));
}

ThreatenerCount count_threateners(const WeightedGraph& g, const CenterSequence& centers,
                                  const DecompositionParams& params, VertexId x, double gamma) {
  require_gamma(gamma);
  if (x >= g.n()) throw ParameterError("count_threateners: vertex out of range");
  const double reach_radius = 2.0 * params.delta / 5.0;
  const std::vector<VertexId> target = ball(g, VertexMask::full(g.n()), x, gamma * params.delta);

  ThreatenerCount out;
  out.vertex = x;
  out.bound = threatener_bound(params.p_eff, g.n());
  for (const CenterRecord& rec : centers.records) {
    const VertexMask& sub = *rec.subgraph;
    if (std::none_of(target.begin(), target.end(), [&](VertexId v) { return sub.contains(v); })) {
      continue;
    }
    ShortestPathTree t = sssp(g, sub, rec.center);
    double nearest = kInfinity;
    for (VertexId v : target) nearest = std::min(nearest, t.dist[v]);
    if (nearest <= reach_radius) ++out.count;
  }
  return out;
}

ThreatenerReport threatener_report(const WeightedGraph& g, const CenterSequence& centers,
                                   const DecompositionParams& params, double gamma) {
  require_gamma(gamma);
  const std::size_t n = g.n();
  const double reach_radius = 2.0 * params.delta / 5.0;
  const double pad = gamma * params.delta;

  // x is threatened by t iff B_G(x, pad) meets T_t, i.e. iff x lies in the
  // pad-neighbourhood of T_t (the ball relation is symmetric).
  BallSearch search(g);
  std::vector<std::vector<VertexId>> pad_ball(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const Reach& r : search.run(static_cast<VertexId>(v), pad)) pad_ball[v].push_back(r.v);
  }

  std::vector<std::size_t> count(n, 0);
  std::vector<std::size_t> stamp(n, 0);
  std::vector<VertexId> reach;
  for (std::size_t j = 0; j < centers.records.size(); ++j) {
    const CenterRecord& rec = centers.records[j];
    reach.clear();
    for (const Reach& r : search.run(*rec.subgraph, rec.center, reach_radius)) reach.push_back(r.v);
    for (VertexId v : reach) {
      for (VertexId x : pad_ball[v]) {
        if (stamp[x] != j + 1) {
          stamp[x] = j + 1;
          ++count[x];
        }
      }
    }
  }

  ThreatenerReport report;
  report.bound = threatener_bound(params.p_eff, n);
  for (std::size_t x = 0; x < n; ++x) {
    ThreatenerCount tc{static_cast<VertexId>(x), count[x], report.bound};
    report.max_count = std::max(report.max_count, tc.count);
    report.ok = report.ok && tc.ok();
    report.per_vertex.push_back(tc);
  }
  return report;
}

double wilson_lower_bound(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) return 0.0;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = p + z2 / (2.0 * n);
  const double spread = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return std::max(0.0, (centre - spread) / (1.0 + z2 / n));
}

double PaddingReport::fitted_beta() const {
  double beta_fit = 0.0;
  for (const PaddingRecord& r : records) {
    if (r.gamma <= 0.0) continue;
    if (r.successes == 0) return kInfinity;
    beta_fit = std::max(beta_fit, -std::log2(r.empirical) / r.gamma);
  }
  return beta_fit;
}

std::vector<VertexId> padding_vertices(std::size_t n, std::uint64_t seed, std::size_t limit) {
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  if (n <= limit) return all;
  RngStream rng(derive_seed(seed, 0xB5AD4ECEDA1CE2A9ULL));
  for (std::size_t i = 0; i < limit; ++i) {
    std::swap(all[i], all[i + rng.next_below(n - i)]);
  }
  all.resize(limit);
  std::sort(all.begin(), all.end());
  return all;
}

PaddingReport estimate_padding(const WeightedGraph& g, double delta,
                               const PartitionSampler& sampler, double beta,
                               std::span<const double> gammas, std::size_t trials,
                               std::uint64_t seed, std::span<const VertexId> vertices) {
  if (trials == 0) throw ParameterError("estimate_padding: trials must be at least 1");
  if (!(delta > 0.0)) throw ParameterError("estimate_padding: delta must be positive");
  for (double gamma : gammas) require_gamma(gamma);

  const std::size_t ng = gammas.size();
  BallSearch search(g);
  // balls[i * ng + k] = B_G(vertices[i], gammas[k] * delta)
  std::vector<std::vector<VertexId>> balls(vertices.size() * ng);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t k = 0; k < ng; ++k) {
      for (const Reach& r : search.run(vertices[i], gammas[k] * delta)) {
        balls[i * ng + k].push_back(r.v);
      }
    }
  }

  std::vector<std::size_t> successes(balls.size(), 0);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Partition part = sampler(derive_seed(seed, trial));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const ClusterId home = part.cluster_of[vertices[i]];
      for (std::size_t k = 0; k < ng; ++k) {
        const auto& b = balls[i * ng + k];
        if (std::all_of(b.begin(), b.end(),
                        [&](VertexId v) { return part.cluster_of[v] == home; })) {
          ++successes[i * ng + k];
        }
      }
    }
  }

  PaddingReport report;
  report.gammas.assign(gammas.begin(), gammas.end());
  report.beta = beta;
  report.trials = trials;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t k = 0; k < ng; ++k) {
      PaddingRecord r;
      r.vertex = vertices[i];
      r.gamma = gammas[k];
      r.trials = trials;
      r.successes = successes[i * ng + k];
      r.empirical = static_cast<double>(r.successes) / static_cast<double>(trials);
      r.wilson_lb = wilson_lower_bound(r.successes, trials, kZ99);
      r.floor = std::exp2(-beta * r.gamma);
      // With every trial padded there is no evidence against any floor <= 1.
      r.pass = r.wilson_lb >= r.floor || r.successes == r.trials;
      report.pass = report.pass && r.pass;
      report.records.push_back(r);
    }
  }
  return report;
}

PaddingReport estimate_padding(const WeightedGraph& g, double delta, const SeparatorFinder& finder,
                               std::span<const double> gammas, std::size_t trials,
                               std::uint64_t seed) {
  const PaperDecomposer dec(g, delta, finder);
  const std::vector<VertexId> vertices = padding_vertices(g.n(), seed);
  return estimate_padding(
      g, delta, [&](std::uint64_t s) { return dec.sample(s); }, dec.beta(), gammas, trials, seed,
      vertices);
}

}  // namespace pdecomp
