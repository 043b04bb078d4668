#include "sixpoint/harness/sampler.hpp"

#include <limits>
#include <numeric>

namespace sixpoint::harness {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Sampler::Sampler(std::uint64_t seed, std::uint64_t trial)
    : engine_(splitmix64(splitmix64(seed) ^ trial)) {}

std::uint64_t Sampler::below(std::uint64_t n) {
  // std::uniform_int_distribution is implementation-defined; rejection
  // sampling keeps streams identical across standard libraries.
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

long Sampler::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Sampler::rational(long max_magnitude) {
  for (;;) {
    long num = between(-max_magnitude, max_magnitude);
    long den = between(1, max_magnitude);
    if (std::gcd(num, den) == 1 || (num == 0 && den == 1)) return Rational(num, den);
  }
}

ProjRatio Sampler::ratio(long max_magnitude, RatioDraw draw) {
  if (draw != RatioDraw::generic) {
    switch (below(16)) {
      case 0: return ProjRatio(0);
      case 1: return ProjRatio(-1);
      case 2:
        if (draw == RatioDraw::projective) return ProjRatio::infinity();
        break;
      default: break;
    }
  }
  return ProjRatio(rational(max_magnitude));
}

CevianRatios Sampler::cevian_ratios(long max_magnitude, RatioDraw draw) {
  CevianRatios r;
  r.d = ratio(max_magnitude, draw);
  r.e = ratio(max_magnitude, draw);
  r.f = ratio(max_magnitude, draw);
  return r;
}

SixRatios Sampler::six_ratios(long max_magnitude, RatioDraw draw) {
  SixRatios r;
  for (SixRatioId id : kSixRatioIds) get(r, id) = ratio(max_magnitude, draw);
  return r;
}

Triangle Sampler::triangle(long max_magnitude) {
  for (;;) {
    ProjPoint a = ProjPoint::affine(rational(max_magnitude), rational(max_magnitude));
    ProjPoint b = ProjPoint::affine(rational(max_magnitude), rational(max_magnitude));
    ProjPoint c = ProjPoint::affine(rational(max_magnitude), rational(max_magnitude));
    if (!signed_area(a, b, c).is_zero()) return Triangle(a, b, c);
  }
}

AffineMap Sampler::affine_map(long max_magnitude) {
  for (;;) {
    std::array<Rational, 4> m = {rational(max_magnitude), rational(max_magnitude),
                                 rational(max_magnitude), rational(max_magnitude)};
    std::array<Rational, 2> t = {rational(max_magnitude), rational(max_magnitude)};
    if (!(m[0] * m[3] - m[1] * m[2]).is_zero()) return AffineMap(m, t);
  }
}

}  // namespace sixpoint::harness
