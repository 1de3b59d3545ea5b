#pragma once

// Per-sample RNG stream derived from (seed, sample index); the underlying
// mt19937_64 sequence is pinned by the standard, and the distributions below
// are hand-rolled so output is identical across standard libraries.

#include <cmath>
#include <cstdint>
#include <random>

namespace ksf {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index)
      : eng_(detail::splitmix64(detail::splitmix64(seed) ^
                                detail::splitmix64(index + 0x51ED2701ull))) {}

  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double log_uniform(double a, double b) {
    return a * std::exp(uniform01() * std::log(b / a));
  }

  long uniform_int(long lo, long hi) {  // inclusive bounds
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }

  double sign() { return (eng_() & 1u) ? 1.0 : -1.0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ksf
