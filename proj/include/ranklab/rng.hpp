#pragma once

#include <cmath>
#include <cstdint>

namespace ranklab {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256** seeded through SplitMix64. All derived quantities
// (bounded ints, unit doubles, normals) are computed from raw 64-bit
// output with fixed arithmetic, so a given seed yields the same stream
// on every platform and standard library. Child streams are derived
// with split(tag); see the README for the splitting discipline.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in [0, bound), unbiased via rejection
  uint64_t below(uint64_t bound) {
    const uint64_t threshold = -bound % bound;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

  // uniform in [0,1) with 53 random bits
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_unit() < p; }

  int sign() { return (next_u64() & 1) ? 1 : -1; }

  // Box-Muller, one value per call (the pair's second half is discarded
  // to keep stream consumption independent of call parity)
  double normal() {
    double u1 = next_unit();
    while (u1 == 0.0) u1 = next_unit();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // deterministic child stream for (this stream, tag)
  Rng split(uint64_t tag) const {
    uint64_t sm = s_[0] ^ rotl(s_[3], 13) ^ (tag * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    Rng child(0);
    for (auto& w : child.s_) w = splitmix64(sm);
    return child;
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

}  // namespace ranklab
