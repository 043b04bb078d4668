#ifndef SIXPOINT_HARNESS_SAMPLER_HPP
#define SIXPOINT_HARNESS_SAMPLER_HPP

#include <cstdint>
#include <random>

#include "sixpoint/projective.hpp"
#include "sixpoint/theorems.hpp"

namespace sixpoint::harness {

/// Which special ratio values a draw may produce.
enum class RatioDraw {
  projective,  // 0, inf and -1 each with probability 1/16
  finite,      // 0 and -1 each with probability 1/16, never inf
  generic,     // no forced special values
};

/// Deterministic random source for one fuzz trial. The stream depends only
/// on (seed, trial), so any trial can be replayed on its own.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t trial);

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi);

  /// Reduced fraction with |numerator|, denominator <= max_magnitude.
  Rational rational(long max_magnitude);
  ProjRatio ratio(long max_magnitude, RatioDraw draw = RatioDraw::projective);
  CevianRatios cevian_ratios(long max_magnitude, RatioDraw draw = RatioDraw::projective);
  SixRatios six_ratios(long max_magnitude, RatioDraw draw = RatioDraw::projective);

  /// Non-degenerate triangle with rational vertices.
  Triangle triangle(long max_magnitude);
  /// Invertible affine map with rational entries.
  AffineMap affine_map(long max_magnitude);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sixpoint::harness

#endif  // SIXPOINT_HARNESS_SAMPLER_HPP
