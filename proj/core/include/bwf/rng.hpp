#pragma once

#include <cstdint>
#include <random>

namespace bwf {

/// Master seed plus the rule for deriving independent substreams.
/// A (master_seed, domain, index) triple always maps to the same stream;
/// distinct triples map to statistically independent streams.
struct SeedSpec {
  std::uint64_t master_seed = 20240101;
};

/// Substream domains. Every consumer of randomness owns a tag so that
/// streams never collide across workflow stages.
enum class StreamDomain : std::uint64_t {
  prior_draw = 1,
  data_sim = 2,
  chain_init = 3,
  chain_sample = 4,
  bridge_proposal = 5,
  posterior_predictive = 6,
  generic = 7,
};

std::uint64_t mix_seed(std::uint64_t state, std::uint64_t value);
std::uint64_t derive_stream(const SeedSpec& seed, StreamDomain domain, std::uint64_t index,
                            std::uint64_t sub_index = 0);

/// Deterministic random stream with the distribution samplers the model
/// family needs. All samplers are implemented here (not via std::
/// distributions) so that draws are reproducible bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t stream_seed);

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi);

  /// Standard normal (Box-Muller, second draw cached).
  double normal();
  double normal(double mean, double sd);

  /// Gamma(shape, 1) via Marsaglia-Tsang; shape < 1 handled by boosting.
  double gamma(double shape);
  double beta(double a, double b);

  /// Correlation of a 2x2 LKJ(eta) draw: 2*Beta(eta, eta) - 1.
  double lkj2_correlation(double eta);

  /// Uniform integer in [0, bound).
  std::uint64_t integer(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace bwf
