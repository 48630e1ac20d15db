#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace jstar {

// Deterministic counter-based generator used for every sampled quantity in
// the library. The exact update is part of the file-format contract (reports
// must reproduce bit-for-bit across runs), so it is spelled out here and in
// the README rather than delegated to std::mt19937 whose distributions are
// implementation-defined.
//
//   state    <- state + 0x9E3779B97F4A7C15
//   mix(z)   =  z ^= z>>30, z *= 0xBF58476D1CE4E5B9,
//               z ^= z>>27, z *= 0x94D049BB133111EB, z ^= z>>31
//   output   =  mix(state)
//
// uniform01: ((output >> 11) + 0.5) * 2^-53, strictly inside (0,1).
// gaussian pair: Box-Muller on two uniform01 draws.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform in the open interval (0,1).
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Two independent standard normals (Box-Muller).
  std::array<double, 2> gaussian_pair() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

  // Complex normal with unit-variance real and imaginary parts.
  std::complex<double> gaussian_complex() {
    const auto g = gaussian_pair();
    return {g[0], g[1]};
  }

 private:
  std::uint64_t state_;
};

// Independent stream for the index-th unit of work under a user seed.
// Per-index keying is what makes per-sample loops order-insensitive and
// safely parallel.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL));
}

// Order-sensitive fold of integer tokens into a key (used to hash quantized
// matrix directions).
inline std::uint64_t fold_key(std::uint64_t key, std::uint64_t token) {
  return mix64(key ^ (token + 0x9E3779B97F4A7C15ULL));
}

} // namespace jstar
