#pragma once

#include <cstdint>

namespace abmod {

// Seed used everywhere unless overridden by --seed / ABMOD_SEED.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed0001u;

// splitmix64. Deterministic across platforms, unlike the std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) {
    // rejection sampling to stay unbiased
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b,
                              std::uint64_t c = 0) {
  Rng r(a ^ 0x243f6a8885a308d3ull);
  std::uint64_t x = r.next() ^ b;
  Rng r2(x);
  return r2.next() ^ (c * 0x9e3779b97f4a7c15ull);
}

}  // namespace abmod
