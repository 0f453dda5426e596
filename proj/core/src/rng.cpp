#include "bwf/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace bwf {

namespace {
// SplitMix64 finalizer; full-period mixing of a 64-bit state.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t mix_seed(std::uint64_t state, std::uint64_t value) {
  return splitmix64(state ^ splitmix64(value));
}

std::uint64_t derive_stream(const SeedSpec& seed, StreamDomain domain, std::uint64_t index,
                            std::uint64_t sub_index) {
  std::uint64_t h = splitmix64(seed.master_seed);
  h = mix_seed(h, static_cast<std::uint64_t>(domain));
  h = mix_seed(h, index);
  h = mix_seed(h, sub_index);
  return h;
}

Rng::Rng(std::uint64_t stream_seed) : engine_(stream_seed) {}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Box-Muller; u1 shifted away from 0 so log() is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * 3.14159265358979323846 * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

double Rng::normal(double mean, double sd) { return mean + sd * normal(); }

double Rng::gamma(double shape) {
  if (!(shape > 0)) throw std::domain_error("Rng::gamma: shape > 0 required");
  if (shape < 1.0) {
    const double u = uniform();
    return gamma(shape + 1.0) * std::pow(std::max(u, 1e-300), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(std::max(u, 1e-300)) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::beta(double a, double b) {
  const double x = gamma(a);
  const double y = gamma(b);
  return x / (x + y);
}

double Rng::lkj2_correlation(double eta) { return 2.0 * beta(eta, eta) - 1.0; }

std::uint64_t Rng::integer(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("Rng::integer: bound > 0 required");
  // Rejection against the largest multiple of bound; unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

}  // namespace bwf
