#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace dualsys {

// splitmix64 finalizer; used to fold seeds and tags into stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random source. Draws are hand-rolled on top of mt19937_64 so
// results do not depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(mix64(seed)) {}

  // Independent substream addressed by (root, tag, index).
  static Rng stream(std::uint64_t root, std::uint64_t tag, std::uint64_t index = 0) {
    return Rng(mix64(root) ^ mix64(tag * 0x9e3779b97f4a7c15ULL + index));
  }

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1).
  double next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    // multiply-shift; bias is negligible for the small n used here
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool next_bool(double p) { return next_unit() < p; }

  // Standard normal via Box-Muller, no cached second value.
  double next_gauss() {
    double u1 = next_unit();
    double u2 = next_unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(next_below(v.size()))];
  }

  // Fisher-Yates over an index vector.
  void shuffle(std::vector<std::size_t>& idx) {
    for (std::size_t i = idx.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(idx[i - 1], idx[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace dualsys
