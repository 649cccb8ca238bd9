#pragma once

#include <cstdint>

namespace pdecomp {

/// Exponential with mean `lambda` conditioned on [lo, hi].
struct TexpParams {
  double lambda;
  double lo;
  double hi;
};

/// Throws ParameterError unless lambda > 0 and 0 <= lo < hi < inf.
void validate(const TexpParams& p);

/// True when lambda is so small relative to (hi - lo) that the law is a
/// point mass at lo.
bool is_degenerate(const TexpParams& p);

double texp_pdf(const TexpParams& p, double x);
double texp_cdf(const TexpParams& p, double x);

/// Inverse CDF. u = 0 maps to lo and u = 1 maps to hi exactly.
double texp_quantile(const TexpParams& p, double u);

/// SplitMix64 finaliser; also used to derive independent child seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed for the `index`-th task spawned from `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Counter-based uniform stream: the k-th output is mix64(seed + (k+1)*golden),
/// i.e. the SplitMix64 sequence. The k-th value depends only on (seed, k), so
/// uniform_at() gives random access without advancing the stream.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64() { return u64_at(counter_++); }
  /// Uniform double in [0, 1) with 53 random bits.
  double next_uniform() { return uniform_at(counter_++); }
  /// Uniform integer in [0, bound), bound >= 1. Unbiased (rejection).
  std::uint64_t next_below(std::uint64_t bound);

  std::uint64_t u64_at(std::uint64_t index) const;
  double uniform_at(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// One radius: texp_quantile of the next uniform in the stream.
double texp_sample(const TexpParams& p, RngStream& rng);

}  // namespace pdecomp
