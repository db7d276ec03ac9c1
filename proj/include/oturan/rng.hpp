#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace oturan {

/// One splitmix64 step; used to derive per-stream seeds from a master
/// seed (documented in the README so runs reproduce across platforms).
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline uint64_t derive_seed(uint64_t master, uint64_t stream) {
  uint64_t state = master ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
  return splitmix64(state);
}

/// Seeded generator with portable output. std::mt19937_64 yields a
/// bit-identical stream everywhere; bounded draws use rejection sampling
/// rather than std::uniform_int_distribution, whose mapping is
/// implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound >= 1, unbiased: draws below
  /// 2^64 mod bound are rejected so the remaining range splits evenly.
  uint64_t below(uint64_t bound) {
    uint64_t skip = (0 - bound) % bound;
    for (;;) {
      uint64_t r = engine_();
      if (r >= skip) return r % bound;
    }
  }

  int below_int(int bound) { return (int)below((uint64_t)bound); }

  bool coin() { return engine_() & 1; }

  /// Uniform double in [0, 1) from the top 53 bits.
  double unit() { return (double)(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = (size_t)below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oturan
