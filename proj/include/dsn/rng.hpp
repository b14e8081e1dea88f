#ifndef DSN_RNG_HPP
#define DSN_RNG_HPP

#include <cstdint>

#include "dsn/errors.hpp"

namespace dsn {

// Seeded splitmix64 generator. Used instead of the standard distributions
// so that seeded sweeps and bench reports are byte-identical across
// platforms and standard-library versions.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) via modulo rejection.
  uint64_t below(uint64_t bound) {
    if (bound == 0) throw ContractError("rng bound must be positive");
    uint64_t threshold = (0 - bound) % bound;
    while (true) {
      uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  // Uniform integer in [lo, hi], inclusive.
  long long range(long long lo, long long hi) {
    if (lo > hi) throw ContractError("rng range is empty");
    return lo + (long long)below((uint64_t)(hi - lo + 1));
  }

  // True with probability num/den.
  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

private:
  uint64_t state_;
};

}  // namespace dsn

#endif
