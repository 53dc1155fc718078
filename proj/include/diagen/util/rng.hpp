#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace diagen::util {

/// splitmix64 step; used to expand seeds into engine state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Deterministic random source (xoshiro256**).
///
/// The standard library's distribution objects are implementation-defined,
/// so every draw here is spelled out in plain uint64 arithmetic: identical
/// seeds give identical streams on any conforming compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1), 53 mantissa bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, n); unbiased via rejection of the incomplete final block.
  std::uint64_t bounded(std::uint64_t n) {
    assert(n > 0);
    std::uint64_t x, r;
    do {
      x = next_u64();
      r = x % n;
    } while (x - r > std::uint64_t(0) - n);
    return r;
  }

  /// Uniform integer in [lo, hi], both inclusive.
  int uniform_int(int lo, int hi) {
    assert(lo <= hi);
    return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi) - lo + 1));
  }

  /// Uniform real in [lo, hi).
  double uniform_real(double lo, double hi) { return lo + next_double() * (hi - lo); }

  bool bernoulli(double p) { return next_double() < p; }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    assert(!items.empty());
    return items[bounded(items.size())];
  }

  /// Index drawn proportionally to non-negative weights (at least one > 0).
  std::size_t pick_weighted(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    assert(total > 0.0);
    double u = next_double() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      u -= weights[i];
      if (u < 0.0) return i;
    }
    return weights.size() - 1;  // u landed on the tail due to rounding
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = bounded(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t state_[4];
};

}  // namespace diagen::util
