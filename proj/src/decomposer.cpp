#include "pdecomp/decomposer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "pdecomp/errors.hpp"
#include "pdecomp/nets.hpp"
#include "pdecomp/sampler.hpp"

namespace pdecomp {
namespace {

void require_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ParameterError("delta must be positive and finite");
  }
}

double radius_lo(double delta) { return delta / 4.0; }
double radius_hi(double delta) { return 2.0 * delta / 5.0; }

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

class CenterBuilder {
 public:
  CenterBuilder(const WeightedGraph& g, double delta, const SeparatorFinder& finder,
                const SeparatorObserver& observer)
      : g_(g), net_radius_(radius_lo(delta)), finder_(finder), observer_(observer) {}

  void visit(const VertexMask& node, int depth) {
    PathSeparator sep = finder_(g_, node);
    if (observer_) observer_(node, sep, depth);
    if (sep.separator_vertices.empty()) {
      throw InvariantError("separator finder returned an empty separator");
    }

    ++seq_.node_count;
    seq_.p_eff = std::max(seq_.p_eff, sep.total_paths);
    seq_.max_depth = std::max(seq_.max_depth, depth);

    for (SeparatorGroup& group : sep.groups) {
      auto subgraph = std::make_shared<const VertexMask>(std::move(group.residual_before));
      for (Path& path : group.paths) {
        const std::size_t path_id = seq_.paths.size();
        PathMetricView view(g_, path);
        for (std::size_t pos : greedy_net_positions(view, net_radius_)) {
          seq_.records.push_back(
              {view.vertex(pos), subgraph, seq_.records.size(), depth, path_id});
        }
        seq_.paths.push_back({std::move(path), subgraph, depth});
      }
    }

    for (const VertexMask& flap : sep.flaps) {
      if (flap.count() >= node.count() || !flap.is_subset_of(node)) {
        throw InvariantError("separator flap does not shrink the residual graph");
      }
      visit(flap, depth + 1);
    }
  }

  CenterSequence take() { return std::move(seq_); }

 private:
  const WeightedGraph& g_;
  double net_radius_;
  const SeparatorFinder& finder_;
  const SeparatorObserver& observer_;
  CenterSequence seq_;
};

struct Claims {
  explicit Claims(std::size_t n) : cluster_of(n, kNoCluster) {}

  std::vector<ClusterId> cluster_of;
  std::vector<Cluster> clusters;
  std::size_t claimed = 0;

  bool done() const { return claimed == cluster_of.size(); }

  // Adds the unclaimed part of one ball (entries sorted by distance).
  void carve_ball(std::span<const Reach> reach, double radius, VertexId center,
                  std::size_t order) {
    Cluster c;
    const auto id = static_cast<ClusterId>(clusters.size());
    for (const Reach& r : reach) {
      if (r.d > radius) break;
      if (cluster_of[r.v] == kNoCluster) {
        cluster_of[r.v] = id;
        c.vertices.push_back(r.v);
      }
    }
    if (c.vertices.empty()) return;
    claimed += c.vertices.size();
    std::sort(c.vertices.begin(), c.vertices.end());
    c.center = center;
    c.center_order = order;
    c.radius = radius;
    clusters.push_back(std::move(c));
  }

  Partition finish() {
    if (!done()) {
      for (std::size_t v = 0; v < cluster_of.size(); ++v) {
        if (cluster_of[v] == kNoCluster) {
          throw InvariantError("carving left vertex " + std::to_string(v) + " uncovered");
        }
      }
    }
    return {std::move(cluster_of), std::move(clusters)};
  }
};

}  // namespace

CenterSequence choose_centers(const WeightedGraph& g, double delta, const SeparatorFinder& finder,
                              const SeparatorObserver& observer) {
  require_delta(delta);
  if (!finder) throw ParameterError("choose_centers: no separator finder");
  CenterBuilder builder(g, delta, finder, observer);
  builder.visit(VertexMask::full(g.n()), 0);
  return builder.take();
}

DecompositionParams make_params(double delta, std::uint64_t seed, std::size_t p_eff,
                                std::size_t n) {
  require_delta(delta);
  if (p_eff == 0) throw ParameterError("p_eff must be at least 1");
  DecompositionParams p;
  p.delta = delta;
  p.seed = seed;
  p.p_eff = p_eff;
  p.K = std::max(2.0, 9.0 * static_cast<double>(p_eff) * ceil_log2(n));
  p.lambda = delta / (10.0 * std::log(p.K));
  return p;
}

double beta_bound(std::size_t p_eff, std::size_t n) {
  if (p_eff == 0) throw ParameterError("beta_bound: p_eff must be at least 1");
  const double K = std::max(2.0, 9.0 * static_cast<double>(p_eff) * ceil_log2(n));
  return 40.0 * std::log(K) / std::log(2.0);
}

CarvePlan::CarvePlan(const WeightedGraph& g, const CenterSequence& centers, double delta)
    : n_(g.n()), delta_(delta), sequence_size_(centers.records.size()) {
  require_delta(delta);
  const double lo = radius_lo(delta);
  const double hi = radius_hi(delta);
  BallSearch search(g);
  std::vector<bool> covered(n_, false);
  std::size_t covered_count = 0;
  offsets_.push_back(0);
  for (const CenterRecord& rec : centers.records) {
    if (covered_count == n_) break;
    for (const Reach& r : search.run(*rec.subgraph, rec.center, hi)) {
      reach_.push_back(r);
      if (r.d <= lo && !covered[r.v]) {
        covered[r.v] = true;
        ++covered_count;
      }
    }
    centers_.push_back(rec.center);
    offsets_.push_back(reach_.size());
  }
}

Partition carve(const CarvePlan& plan, const DecompositionParams& params) {
  if (params.delta != plan.delta()) throw ParameterError("carve: plan built for a different delta");
  const TexpParams texp{params.lambda, radius_lo(params.delta), radius_hi(params.delta)};
  validate(texp);
  const RngStream rng(params.seed);
  Claims claims(plan.n());
  for (std::size_t j = 0; j < plan.size() && !claims.done(); ++j) {
    const double radius = texp_quantile(texp, rng.uniform_at(j));
    claims.carve_ball(plan.reach(j), radius, plan.center(j), j);
  }
  return claims.finish();
}

Partition carve(const WeightedGraph& g, const CenterSequence& centers,
                const DecompositionParams& params) {
  return carve(CarvePlan(g, centers, params.delta), params);
}

PaperDecomposer::PaperDecomposer(const WeightedGraph& g, double delta,
                                 const SeparatorFinder& finder, const SeparatorObserver& observer)
    : n_(g.n()),
      delta_(delta),
      centers_(choose_centers(g, delta, finder, observer)),
      plan_(g, centers_, delta) {}

DecompositionParams PaperDecomposer::params(std::uint64_t seed) const {
  return make_params(delta_, seed, centers_.p_eff, n_);
}

double PaperDecomposer::beta() const { return beta_bound(centers_.p_eff, n_); }

Partition PaperDecomposer::sample(std::uint64_t seed) const { return carve(plan_, params(seed)); }

Partition decompose(const WeightedGraph& g, double delta, std::uint64_t seed,
                    const SeparatorFinder& finder) {
  return PaperDecomposer(g, delta, finder).sample(seed);
}

BaselineDecomposer::BaselineDecomposer(const WeightedGraph& g, double delta)
    : g_(&g), delta_(delta) {
  require_delta(delta);
  lambda_ = delta / (10.0 * std::log(std::max<double>(2.0, static_cast<double>(g.n()))));
}

double BaselineDecomposer::beta() const {
  return 40.0 * std::log(std::max<double>(2.0, static_cast<double>(g_->n()))) / std::log(2.0);
}

Partition BaselineDecomposer::sample(std::uint64_t seed) const {
  const std::size_t n = g_->n();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  RngStream order_rng(derive_seed(seed, 0));
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[order_rng.next_below(i)]);
  }

  const TexpParams texp{lambda_, radius_lo(delta_), radius_hi(delta_)};
  const RngStream radius_rng(derive_seed(seed, 1));
  BallSearch search(*g_);
  Claims claims(n);
  for (std::size_t j = 0; j < n && !claims.done(); ++j) {
    const double radius = texp_quantile(texp, radius_rng.uniform_at(j));
    claims.carve_ball(search.run(order[j], radius), radius, order[j], j);
  }
  return claims.finish();
}

Partition baseline_decompose(const WeightedGraph& g, double delta, std::uint64_t seed) {
  return BaselineDecomposer(g, delta).sample(seed);
}

void write_partition(std::ostream& out, const Partition& part, const std::string& metadata) {
  out << metadata << '\n';
  for (std::size_t c = 0; c < part.clusters.size(); ++c) {
    for (VertexId v : part.clusters[c].vertices) out << c << ' ' << v << '\n';
  }
}

std::string partition_metadata(const DecompositionParams& params, double beta) {
  return "delta=" + shortest(params.delta) + " seed=" + std::to_string(params.seed) +
         " p_eff=" + std::to_string(params.p_eff) + " K=" + shortest(params.K) +
         " lambda=" + shortest(params.lambda) + " beta=" + shortest(beta);
}

}  // namespace pdecomp
