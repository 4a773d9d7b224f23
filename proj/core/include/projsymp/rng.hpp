#ifndef PROJSYMP_RNG_HPP
#define PROJSYMP_RNG_HPP

#include <cstdint>

#include "projsymp/rational.hpp"

namespace projsymp {

/// xoshiro256** seeded through splitmix64. Self-contained so that seeded
/// suites reproduce bit-identically across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& word : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  uint64_t next() {
    auto rotl = [](uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
    uint64_t result = rotl(s_[1] * 5, 7) * 9;
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [lo, hi], inclusive.
  long int_in(long lo, long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  bool chance(double p) { return uniform01() < p; }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform-ish in [-1, 1].
  double sym_unit() { return 2.0 * uniform01() - 1.0; }

  /// Small nonzero rational with |num| <= max_num, 1 <= den <= max_den.
  Rational small_rational(long max_num = 9, long max_den = 9) {
    long n = 0;
    while (n == 0) n = int_in(-max_num, max_num);
    return Rational(n, int_in(1, max_den));
  }

  /// Small rational, zero allowed.
  Rational small_rational_or_zero(long max_num = 9, long max_den = 9) {
    return Rational(int_in(-max_num, max_num), int_in(1, max_den));
  }

 private:
  uint64_t s_[4];
};

}  // namespace projsymp

#endif
