#include "pdecomp/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdecomp/errors.hpp"

namespace pdecomp {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

void validate(const TexpParams& p) {
  if (!(p.lambda > 0.0) || !std::isfinite(p.lambda)) {
    throw ParameterError("texp: lambda must be positive and finite");
  }
  if (!(p.lo >= 0.0) || !(p.lo < p.hi) || !std::isfinite(p.hi)) {
    throw ParameterError("texp: need 0 <= lo < hi < inf, got lo=" + std::to_string(p.lo) +
                         " hi=" + std::to_string(p.hi));
  }
}

bool is_degenerate(const TexpParams& p) { return p.lambda < 1e-300 * (p.hi - p.lo); }

// All three functions work in the shifted variable t = x - lo, which keeps
// e^{-t/lambda} in (0, 1] and avoids overflow for tiny lambda.

double texp_pdf(const TexpParams& p, double x) {
  validate(p);
  if (x < p.lo || x > p.hi) return 0.0;
  const double mass = -std::expm1(-(p.hi - p.lo) / p.lambda);
  return std::exp(-(x - p.lo) / p.lambda) / (p.lambda * mass);
}

double texp_cdf(const TexpParams& p, double x) {
  validate(p);
  if (x <= p.lo) return 0.0;
  if (x >= p.hi) return 1.0;
  if (is_degenerate(p)) return 1.0;
  const double f = std::expm1(-(x - p.lo) / p.lambda) / std::expm1(-(p.hi - p.lo) / p.lambda);
  return std::clamp(f, 0.0, 1.0);
}

double texp_quantile(const TexpParams& p, double u) {
  validate(p);
  if (!(u >= 0.0 && u <= 1.0)) throw ParameterError("texp_quantile: u must lie in [0, 1]");
  if (u == 0.0 || is_degenerate(p)) return p.lo;
  if (u == 1.0) return p.hi;
  // x = lo - lambda * ln(1 - u (1 - e^{-(hi-lo)/lambda}))
  const double mass = -std::expm1(-(p.hi - p.lo) / p.lambda);
  const double x = p.lo - p.lambda * std::log1p(-u * mass);
  return std::clamp(x, p.lo, p.hi);
}

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ (index * kGolden + 0x632BE59BD9B4E019ULL));
}

std::uint64_t RngStream::u64_at(std::uint64_t index) const {
  return mix64(seed_ + (index + 1) * kGolden);
}

double RngStream::uniform_at(std::uint64_t index) const {
  return static_cast<double>(u64_at(index) >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
  if (bound == 0) throw ParameterError("next_below: bound must be positive");
  // Reject the top sliver so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t x = next_u64();
    if (x < limit) return x % bound;
  }
}

double texp_sample(const TexpParams& p, RngStream& rng) {
  return texp_quantile(p, rng.next_uniform());
}

}  // namespace pdecomp
