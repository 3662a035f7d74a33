#pragma once

#include <cstdint>

#include "ortho/errors.hpp"
#include "ortho/geometry.hpp"
#include "ortho/rational.hpp"

namespace ortho {

// splitmix64 step; fixed algorithm so streams are identical on every
// platform and toolchain.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Per-trial seeds are a pure function of (base seed, index), so any trial
// can be reproduced without replaying the ones before it.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t state = base ^ (0xD1B54A32D192ED03ull * (index + 1));
  return splitmix64(state);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64(state_); }

  // Uniform on [lo, hi], inclusive, via rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
  }

 private:
  std::uint64_t state_;
};

// Numerator in [-range, range], denominator in [1, range]; the reduced
// value keeps |q| <= range and denominator(q) <= range.
inline Rational sample_rational(Rng& rng, int range) {
  const Integer num = rng.uniform(-range, range);
  const Integer den = rng.uniform(1, range);
  return make_rational(num, den);
}

inline Rational sample_nonzero_rational(Rng& rng, int range) {
  for (;;) {
    Rational q = sample_rational(rng, range);
    if (q != 0) return q;
  }
}

inline Point2 sample_point2(Rng& rng, int range) {
  Rational x = sample_rational(rng, range);
  Rational y = sample_rational(rng, range);
  return {std::move(x), std::move(y)};
}

// Rejects collinear draws; after 64 consecutive rejections the coordinate
// range is doubled, so termination does not depend on luck at small ranges.
inline Triangle2 sample_triangle2(Rng& rng, int range) {
  for (;;) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Point2 a = sample_point2(rng, range);
      Point2 b = sample_point2(rng, range);
      Point2 c = sample_point2(rng, range);
      if (a == b || b == c || a == c || collinear(a, b, c)) continue;
      return Triangle2(std::move(a), std::move(b), std::move(c));
    }
    range *= 2;
  }
}

}  // namespace ortho
