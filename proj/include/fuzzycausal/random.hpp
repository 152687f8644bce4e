#pragma once

#include <cstdint>
#include <random>

namespace fuzzycausal {

/// Deterministic, platform-independent random source.
///
/// The engine is mt19937_64 (bit-stable across platforms by the standard);
/// uniform and normal variates are derived here by hand because the
/// std::*_distribution classes are not portable. Identical (seed, stream)
/// pairs produce identical sequences everywhere. Substreams derived from the
/// same parent are statistically independent and reproducible, which is what
/// lets Monte Carlo loops split work without sharing generator state.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  /// Independent stream keyed by (this stream, index).
  RandomSource substream(std::uint64_t index) const;

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double uniform01();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  double normal(double mean, double stddev);

  /// Normal rejection-sampled into [lo, hi].
  double truncated_normal(double mean, double stddev, double lo, double hi);

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace fuzzycausal
