#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pdecomp/errors.hpp"
#include "pdecomp/generators.hpp"
#include "pdecomp/verifier.hpp"

using namespace pdecomp;

namespace {

WeightedGraph unit_path(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId v = 1; v < n; ++v) e.push_back({v - 1, v, 1.0});
  return WeightedGraph::from_edges(n, e);
}

Partition from_clusters(std::size_t n, std::vector<std::vector<VertexId>> groups) {
  Partition p;
  p.cluster_of.assign(n, kNoCluster);
  for (std::size_t c = 0; c < groups.size(); ++c) {
    for (VertexId v : groups[c]) p.cluster_of[v] = static_cast<ClusterId>(c);
    p.clusters.push_back(Cluster{std::move(groups[c]), 0, 0, 0.0});
  }
  return p;
}

Partition singletons(std::size_t n) {
  std::vector<std::vector<VertexId>> g;
  for (VertexId v = 0; v < n; ++v) g.push_back({v});
  return from_clusters(n, g);
}

const std::vector<double> kGammas{0.0, 1.0 / 400, 1.0 / 200, 1.0 / 100};

}  // namespace

TEST_CASE("check_partition") {
  const WeightedGraph g = unit_path(4);
  CHECK(check_partition(g, singletons(4)).ok);

  SUBCASE("vertex in two clusters is named") {
    Partition p = from_clusters(4, {{0, 1}, {1, 2, 3}});
    const CheckResult r = check_partition(g, p);
    CHECK_FALSE(r.ok);
    CHECK(r.message == "vertex 1 is in clusters 0 and 1");
  }
  SUBCASE("uncovered vertex") {
    Partition p = from_clusters(4, {{0, 1}, {3}});
    p.cluster_of[2] = 0;
    const CheckResult r = check_partition(g, p);
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("vertex 2") != std::string::npos);
  }
  SUBCASE("empty cluster") {
    Partition p = from_clusters(4, {{0, 1, 2, 3}, {}});
    CHECK_FALSE(check_partition(g, p).ok);
  }
  SUBCASE("inconsistent cluster_of") {
    Partition p = from_clusters(4, {{0, 1}, {2, 3}});
    p.cluster_of[3] = 0;
    CHECK_FALSE(check_partition(g, p).ok);
  }
}

TEST_CASE("check_cluster_diameters") {
  const WeightedGraph g = unit_path(4);
  CHECK(check_cluster_diameters(g, singletons(4), 0.001).ok);
  // d(0, 3) = 3 > delta = 2.
  const CheckResult r = check_cluster_diameters(g, from_clusters(4, {{0, 3}, {1}, {2}}), 2.0);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("cluster 0") != std::string::npos);
  // Diameter 3 against 4/5 of 3.75 = 3: boundary is allowed.
  CHECK(check_cluster_diameters(g, from_clusters(4, {{0, 1, 2, 3}}), 3.75).ok);
  CHECK_FALSE(check_cluster_diameters(g, from_clusters(4, {{0, 1, 2, 3}}), 3.7).ok);
}

TEST_CASE("padding at gamma zero and on a single vertex") {
  const WeightedGraph g = gen_grid(6, 6, WeightMode::kUniform, 2);
  const std::vector<double> zero{0.0};
  const PaddingReport rep = estimate_padding(g, 3.0, greedy_find, zero, 50, 1);
  CHECK(rep.pass);
  for (const auto& r : rep.records) {
    CHECK(r.successes == r.trials);
    CHECK(r.floor == 1.0);
    CHECK(r.empirical == 1.0);
  }

  const WeightedGraph one = WeightedGraph::from_edges(1, {});
  const PaddingReport single = estimate_padding(one, 1.0, greedy_find, kGammas, 20, 3);
  CHECK(single.pass);
  CHECK(single.records.size() == kGammas.size());
  for (const auto& r : single.records) CHECK(r.empirical == 1.0);
  CHECK(single.fitted_beta() == 0.0);
}

TEST_CASE("padding rejects gamma outside [0, 1/100]") {
  const WeightedGraph g = unit_path(3);
  const std::vector<double> big{0.02};
  const std::vector<double> neg{-0.001};
  CHECK_THROWS_AS(estimate_padding(g, 1.0, greedy_find, big, 10, 1), ParameterError);
  CHECK_THROWS_AS(estimate_padding(g, 1.0, greedy_find, neg, 10, 1), ParameterError);
  CHECK_THROWS_AS(estimate_padding(g, 1.0, greedy_find, kGammas, 0, 1), ParameterError);
}

TEST_CASE("padding on a long path is nontrivial, monotone and reproducible") {
  // gamma * delta reaches 2 hops, so the padding event genuinely varies.
  const WeightedGraph g = unit_path(1000);
  const PaddingReport a = estimate_padding(g, 200.0, tree_centroid_find, kGammas, 2000, 11);
  const PaddingReport b = estimate_padding(g, 200.0, tree_centroid_find, kGammas, 2000, 11);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].successes == b.records[i].successes);
    CHECK(a.records[i].vertex == b.records[i].vertex);
  }
  CHECK(a.records.size() == 256 * kGammas.size());

  bool some_miss = false;
  for (std::size_t i = 0; i < a.records.size(); i += kGammas.size()) {
    for (std::size_t k = 1; k < kGammas.size(); ++k) {
      CHECK(a.records[i + k].successes <= a.records[i + k - 1].successes);
    }
    some_miss = some_miss || a.records[i + 3].successes < a.trials;
  }
  CHECK(some_miss);
  CHECK(a.pass);
  CHECK(std::isfinite(a.fitted_beta()));
  CHECK(a.fitted_beta() > 0.0);
  CHECK(a.fitted_beta() <= a.beta);
  // n = 1000 and p_eff = 1 give K = 9 * 1 * 10.
  CHECK(a.beta == doctest::Approx(40.0 * std::log(90.0) / std::log(2.0)));
}

TEST_CASE("padding records satisfy their invariants") {
  const WeightedGraph g = gen_grid(7, 7, WeightMode::kUniform, 5);
  const PaddingReport rep = estimate_padding(g, 20.0, greedy_find, kGammas, 300, 8);
  for (const auto& r : rep.records) {
    CHECK(r.successes <= r.trials);
    CHECK(r.wilson_lb <= r.empirical);
    CHECK(r.floor == doctest::Approx(std::exp2(-rep.beta * r.gamma)));
  }
}

TEST_CASE("fitted beta") {
  PaddingReport rep;
  rep.records.push_back({0, 0.0, 100, 100, 1.0, 0.0, 1.0, true});
  rep.records.push_back({0, 0.01, 100, 50, 0.5, 0.0, 0.5, true});
  rep.records.push_back({0, 0.005, 100, 100, 1.0, 0.0, 0.5, true});
  CHECK(rep.fitted_beta() == doctest::Approx(100.0));
  rep.records.push_back({1, 0.0025, 100, 0, 0.0, 0.0, 0.5, false});
  CHECK(rep.fitted_beta() == kInfinity);
}

TEST_CASE("Wilson lower bound") {
  CHECK(kZ99 == doctest::Approx(2.3263478740408408).epsilon(1e-15));
  CHECK(wilson_lower_bound(90, 100, kZ99) == doctest::Approx(0.8084541325714024).epsilon(1e-13));
  CHECK(wilson_lower_bound(10000, 10000, kZ99) == doctest::Approx(0.999459103284487).epsilon(1e-13));
  CHECK(wilson_lower_bound(5000, 10000, kZ99) == doctest::Approx(0.4883714068401076).epsilon(1e-13));
  CHECK(wilson_lower_bound(0, 50, kZ99) == 0.0);
  CHECK(wilson_lower_bound(0, 0, kZ99) == 0.0);
  for (std::size_t s = 0; s <= 200; ++s) {
    CHECK(wilson_lower_bound(s, 200, kZ99) <= static_cast<double>(s) / 200.0);
    if (s > 0) CHECK(wilson_lower_bound(s, 200, kZ99) > wilson_lower_bound(s - 1, 200, kZ99));
  }
}

TEST_CASE("padding vertices") {
  const auto small = padding_vertices(100, 3);
  CHECK(small.size() == 100);
  CHECK(small.front() == 0);
  CHECK(small.back() == 99);

  const auto big = padding_vertices(5000, 3);
  CHECK(big.size() == 256);
  CHECK(std::is_sorted(big.begin(), big.end()));
  CHECK(std::adjacent_find(big.begin(), big.end()) == big.end());
  CHECK(big.back() < 5000);
  CHECK(big == padding_vertices(5000, 3));
  CHECK(big != padding_vertices(5000, 4));
}

TEST_CASE("threateners on a single vertex") {
  const WeightedGraph g = WeightedGraph::from_edges(1, {});
  const CenterSequence cs = choose_centers(g, 1.0, greedy_find);
  const DecompositionParams p = make_params(1.0, 0, cs.p_eff, 1);
  const ThreatenerCount t = count_threateners(g, cs, p, 0, 0.01);
  CHECK(t.count == 1);
  CHECK(t.bound >= 4);
  CHECK(t.ok());
  CHECK_THROWS_AS(count_threateners(g, cs, p, 0, 0.5), ParameterError);
}

TEST_CASE("threateners on the 8x8 grid") {
  const WeightedGraph g = gen_grid(8, 8, WeightMode::kUnit, 0);
  const CenterSequence cs = choose_centers(g, 8.0, greedy_find);
  const DecompositionParams p = make_params(8.0, 0, cs.p_eff, 64);
  CHECK(threatener_bound(cs.p_eff, 64) == 4 * cs.p_eff * 6);
  for (VertexId x = 0; x < 64; ++x) {
    const ThreatenerCount t = count_threateners(g, cs, p, x, 0.01);
    CHECK(t.count >= 1);
    CHECK(t.count <= 4 * cs.p_eff * 6);
  }
}

TEST_CASE("property: batched threatener report matches the direct count") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 40);
    const WeightedGraph g = oracle::random_connected(n, rng() % n, rng, true);
    const double delta = std::vector<double>{6.0, 60.0, 150.0, 400.0}[it % 4];
    const CenterSequence cs = choose_centers(g, delta, greedy_find);
    const DecompositionParams p = make_params(delta, 0, cs.p_eff, n);
    std::vector<std::size_t> prev(n, 0);
    for (double gamma : kGammas) {
      const ThreatenerReport rep = threatener_report(g, cs, p, gamma);
      for (VertexId x = 0; x < n; ++x) {
        const ThreatenerCount direct = count_threateners(g, cs, p, x, gamma);
        CHECK(rep.per_vertex[x].count == direct.count);
        CHECK(direct.count >= prev[x]);
        CHECK(direct.count >= 1);
        prev[x] = direct.count;
      }
    }
  }
}

TEST_CASE("recursion depth check") {
  const WeightedGraph one = WeightedGraph::from_edges(1, {});
  CHECK(check_recursion_depth(choose_centers(one, 1.0, greedy_find), 1).ok);

  const WeightedGraph g = unit_path(5);
  const CenterSequence cs = choose_centers(g, 4.0, tree_centroid_find);
  CHECK(cs.max_depth <= 3);
  CHECK(check_recursion_depth(cs, 5).ok);

  CenterSequence deep = cs;
  deep.max_depth = 4;
  CHECK_FALSE(check_recursion_depth(deep, 5).ok);
}

TEST_CASE("coverage certificate") {
  const WeightedGraph g = gen_grid(8, 8, WeightMode::kUniform, 1);
  const CenterSequence cs = choose_centers(g, 6.0, greedy_find);
  CHECK(check_coverage_certificate(g, cs, 6.0).ok);
  // With a smaller delta the same nets no longer cover their paths.
  CHECK_FALSE(check_coverage_certificate(g, cs, 0.5).ok);

  CenterSequence dropped = cs;
  const std::size_t last = dropped.paths.size() - 1;
  std::erase_if(dropped.records, [&](const CenterRecord& r) { return r.path_id == last; });
  CHECK_FALSE(check_coverage_certificate(g, dropped, 6.0).ok);
}
