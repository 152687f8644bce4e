#include "fuzzycausal/random.hpp"

#include <cmath>
#include <numbers>

namespace fuzzycausal {

namespace {

// splitmix64; used only to turn (seed, stream) into engine seed material.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ mix64(b + 0x632be59bd9b4e019ULL));
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(combine(seed, stream)) {}

RandomSource RandomSource::substream(std::uint64_t index) const {
  return RandomSource(seed_, combine(stream_, index + 1));
}

std::uint64_t RandomSource::next_u64() { return engine_(); }

double RandomSource::uniform01() {
  // 53-bit mantissa; [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double RandomSource::normal(double mean, double stddev) {
  // Box-Muller without caching the second variate: two uniforms per draw,
  // so the stream position never depends on call history.
  double u1 = uniform01();
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log1p(-u1));
  double z = r * std::cos(2.0 * std::numbers::pi * u2);
  return mean + stddev * z;
}

double RandomSource::truncated_normal(double mean, double stddev, double lo,
                                      double hi) {
  for (;;) {
    double x = normal(mean, stddev);
    if (x >= lo && x <= hi) return x;
  }
}

std::uint64_t RandomSource::below(std::uint64_t n) {
  // Rejection to avoid modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % n;
  }
}

}  // namespace fuzzycausal
