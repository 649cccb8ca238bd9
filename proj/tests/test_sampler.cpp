#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pdecomp/errors.hpp"
#include "pdecomp/sampler.hpp"

using namespace pdecomp;

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(validate(TexpParams{1.0, 0.0, 1.0}));
  CHECK_THROWS_AS(validate(TexpParams{0.0, 0.0, 1.0}), ParameterError);
  CHECK_THROWS_AS(validate(TexpParams{-1.0, 0.0, 1.0}), ParameterError);
  CHECK_THROWS_AS(validate(TexpParams{1.0, -0.5, 1.0}), ParameterError);
  CHECK_THROWS_AS(validate(TexpParams{1.0, 1.0, 1.0}), ParameterError);
  CHECK_THROWS_AS(validate(TexpParams{1.0, 0.0, std::numeric_limits<double>::infinity()}), ParameterError);
  CHECK_THROWS_AS(texp_pdf(TexpParams{0.0, 0.0, 1.0}, 0.5), ParameterError);
  CHECK_THROWS_AS(texp_cdf(TexpParams{1.0, 2.0, 1.0}, 0.5), ParameterError);
}

TEST_CASE("pdf vanishes outside the support") {
  const TexpParams p{1.0, 0.25, 0.4};
  CHECK(texp_pdf(p, 0.2) == 0.0);
  CHECK(texp_pdf(p, 0.41) == 0.0);
  CHECK(texp_pdf(p, 0.3) > 0.0);
}

TEST_CASE("pdf integrates to one") {
  for (const TexpParams p : {TexpParams{1.0, 0.0, 1.0}, TexpParams{1.0, 0.25, 0.4},
                             TexpParams{0.01, 2.0, 3.2}, TexpParams{50.0, 5.0, 8.0},
                             TexpParams{0.0271, 0.25, 0.4}}) {
    const double total = oracle::integrate([&](double x) { return texp_pdf(p, x); }, p.lo, p.hi);
    CHECK(std::abs(total - 1.0) < 1e-9);
  }
}

TEST_CASE("pdf tends to uniform for huge lambda") {
  const TexpParams p{1e12, 0.0, 1.0};
  CHECK(std::abs(texp_pdf(p, 0.5) - 1.0) < 1e-6);
}

TEST_CASE("cdf boundaries and monotonicity") {
  const TexpParams p{0.3, 1.0, 2.0};
  CHECK(texp_cdf(p, p.lo) == 0.0);
  CHECK(texp_cdf(p, p.hi) == 1.0);
  CHECK(texp_cdf(p, 0.0) == 0.0);
  CHECK(texp_cdf(p, 5.0) == 1.0);
  double prev = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = p.lo + (p.hi - p.lo) * i / 1000.0;
    const double f = texp_cdf(p, x);
    CHECK(f >= prev);
    prev = f;
  }
}

TEST_CASE("cdf at the midpoint of the unit interval") {
  const TexpParams p{1.0, 0.0, 1.0};
  const double quad = oracle::integrate([&](double x) { return texp_pdf(p, x); }, 0.0, 0.5);
  const double closed = (1.0 - std::exp(-0.5)) / (1.0 - std::exp(-1.0));
  CHECK(std::abs(quad - closed) < 1e-12);
  CHECK(std::abs(texp_cdf(p, 0.5) - closed) < 1e-12);
}

TEST_CASE("property: cdf is the antiderivative of pdf") {
  for (const TexpParams p : {TexpParams{1.0, 0.25, 0.4}, TexpParams{0.05, 1.0, 3.0}}) {
    for (int i = 0; i <= 50; ++i) {
      const double x = p.lo + (p.hi - p.lo) * i / 50.0;
      const double quad = oracle::integrate([&](double t) { return texp_pdf(p, t); }, p.lo, x);
      CHECK(std::abs(texp_cdf(p, x) - quad) < 1e-9);
    }
  }
}

TEST_CASE("quantile endpoints are exact") {
  for (const TexpParams p : {TexpParams{1.0, 0.25, 0.4}, TexpParams{1e-3, 2.5, 4.0},
                             TexpParams{1e9, 0.0, 1.0}}) {
    CHECK(texp_quantile(p, 0.0) == p.lo);
    CHECK(texp_quantile(p, 1.0) == p.hi);
  }
}

TEST_CASE("quantile inverts the cdf") {
  const TexpParams p{0.07, 2.0, 3.2};
  for (int i = 1; i < 100; ++i) {
    const double u = i / 100.0;
    CHECK(texp_cdf(p, texp_quantile(p, u)) == doctest::Approx(u).epsilon(1e-12));
  }
}

TEST_CASE("degenerate lambda collapses to the lower end") {
  const TexpParams p{1e-310, 1.0, 2.0};
  CHECK(is_degenerate(p));
  CHECK(texp_quantile(p, 0.5) == 1.0);
  CHECK(texp_quantile(p, 1.0) == 1.0);
  CHECK_FALSE(is_degenerate(TexpParams{1e-3, 1.0, 2.0}));
  const TexpParams tiny{1e-4, 1.0, 2.0};
  CHECK(texp_quantile(tiny, 0.999999) < 1.01);
}

TEST_CASE("KS fit on a million samples") {
  const TexpParams p{1.0, 0.25, 0.4};
  RngStream rng(12345);
  std::vector<double> xs(1000000);
  for (double& x : xs) x = texp_sample(p, rng);
  const double ks = oracle::ks_statistic(xs, [&](double x) { return texp_cdf(p, x); });
  CHECK(ks < 0.002);
  CHECK(*std::min_element(xs.begin(), xs.end()) >= p.lo);
  CHECK(*std::max_element(xs.begin(), xs.end()) <= p.hi);
}

TEST_CASE("sampling is deterministic and in range") {
  const TexpParams p{0.02, 3.0, 4.8};
  RngStream a(99);
  RngStream b(99);
  RngStream c(100);
  int differ = 0;
  for (int i = 0; i < 10000; ++i) {
    const double x = texp_sample(p, a);
    const double y = texp_sample(p, b);
    const double z = texp_sample(p, c);
    CHECK(x == y);
    CHECK(x >= p.lo);
    CHECK(x <= p.hi);
    differ += x != z;
  }
  CHECK(differ > 9900);
}

TEST_CASE("SplitMix64 reference values") {
  // First outputs of the reference SplitMix64 generator seeded with 0.
  RngStream rng(0);
  CHECK(rng.next_u64() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next_u64() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next_u64() == 0x06c45d188009454fULL);
}

TEST_CASE("random access matches the sequential stream") {
  RngStream seq(42);
  const RngStream ra(42);
  for (std::uint64_t k = 0; k < 100; ++k) {
    CHECK(seq.counter() == k);
    const double u = seq.next_uniform();
    CHECK(u == ra.uniform_at(k));
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("next_below stays in range and hits every value") {
  RngStream rng(5);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.next_below(7);
    REQUIRE(v < 7);
    ++hits[v];
  }
  for (int h : hits) CHECK(h > 800);
  CHECK(rng.next_below(1) == 0);
}

TEST_CASE("derived seeds are distinct") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t m : {0ULL, 1ULL, 2ULL}) {
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(m, i));
  }
  CHECK(seen.size() == 3000);
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}
