// Deterministic random number generation. All stages derive their generator
// from one top-level seed plus a stage tag, so a full pipeline run is
// reproducible bit-for-bit regardless of platform or standard library.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tagdyn/util.hpp"

namespace tagdyn {

// xoshiro256++ with splitmix64 seeding. Distribution helpers are written
// out here instead of using <random> adapters, whose output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& s : state_) {
      x += 0x9e3779b97f4a7c15ULL;
      uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      s = z ^ (z >> 31);
    }
  }

  // A generator for a named sub-stage, independent of draws made so far.
  static Rng derive(uint64_t seed, std::string_view tag) {
    return Rng(fnv1a64(tag, seed ^ 0x5851f42d4c957f2dULL));
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform integer in [0, n) by rejection, bias-free.
  uint64_t uniform_u64(uint64_t n) {
    if (n == 0) throw InternalError("uniform_u64 with n = 0");
    const uint64_t threshold = (0 - n) % n;
    while (true) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  size_t index(size_t n) { return static_cast<size_t>(uniform_u64(n)); }

  // Uniform double in [0, 1).
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller; one spare value cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1, u2;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Knuth for small means, normal approximation for large ones.
  long poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    if (lambda < 30.0) {
      double limit = std::exp(-lambda);
      double prod = uniform();
      long k = 0;
      while (prod > limit) {
        ++k;
        prod *= uniform();
      }
      return k;
    }
    double v = normal(lambda, std::sqrt(lambda));
    return v < 0.0 ? 0 : static_cast<long>(std::llround(v));
  }

  // Fisher-Yates sample of k distinct indices from [0, n).
  std::vector<size_t> sample_without_replacement(size_t n, size_t k) {
    if (k > n) throw InternalError("sample size exceeds population");
    std::vector<size_t> pool(n);
    for (size_t i = 0; i < n; ++i) pool[i] = i;
    for (size_t i = 0; i < k; ++i) {
      size_t j = i + index(n - i);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t state_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tagdyn
