#pragma once

#include <cstdint>

#include "maw/numbers.hpp"

namespace maw {

// Deterministic splitmix64 stream.  Used instead of <random> distributions so
// reports are byte-stable for a fixed seed independent of the standard
// library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound >= 1, rejection-free enough for tests.
  std::uint64_t next_below(std::uint64_t bound) {
    // Lemire multiply-shift reduction; deterministic across platforms.
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    return static_cast<std::uint64_t>(m >> 64);
  }

  long next_in(long lo, long hi) {  // inclusive ends
    return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Rational k/den with k in [lo*den, hi*den]; small denominators keep the
  // exact arithmetic cheap and make ties likely, which the map checks want.
  Rat next_rat(long lo, long hi, long den) {
    return Rat(next_in(lo * den, hi * den), den);
  }

  // Uniform on the lattice lo + k*(hi - lo)/steps, k in [0, steps]; both end
  // points are reachable.
  Rat next_rat(const Rat& lo, const Rat& hi, long steps) {
    return lo + (hi - lo) * next_in(0, steps) / steps;
  }

  // Derive an independent stream for task `index` of a batch.
  Rng fork(std::uint64_t index) const {
    Rng r(state_ ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL));
    r.next_u64();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace maw
