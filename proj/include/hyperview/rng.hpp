#ifndef HYPERVIEW_RNG_HPP_
#define HYPERVIEW_RNG_HPP_

#include <cstdint>

namespace hyperview {

// Deterministic 64-bit generator (splitmix64). The standard <random>
// distributions are implementation-defined, so every seeded draw in the
// library goes through this to keep outputs identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
  }

  // uniform integer in [0, n)
  std::uint64_t next_below(std::uint64_t n) {
    return n == 0 ? 0 : next_u64() % n;
  }

 private:
  std::uint64_t state_;
};

}  // namespace hyperview

#endif  // HYPERVIEW_RNG_HPP_
