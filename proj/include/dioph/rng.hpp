#pragma once

#include <cstdint>

#include "dioph/rational.hpp"

namespace dioph {

// Counter-based deterministic generator: the stream for sample index k under
// seed s is independent of how many draws earlier samples made, so a report
// can be extended with more samples without re-randomizing existing ones.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t sample_index) {
    state_ = mix(seed ^ mix(sample_index + 0x9E3779B97F4A7C15ULL));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform double in [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [-half_width, half_width).
  double next_symmetric(double half_width) {
    return (2.0 * next_unit() - 1.0) * half_width;
  }

  // Exact dyadic rational in [-1/2, 1/2) with 64 fractional bits.
  Rational next_dyadic_half() {
    std::uint64_t u = next_u64();
    mpz_class num(0);
    mpz_import(num.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
    num -= mpz_class(1) << 63;
    mpz_class den = mpz_class(1) << 64;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace dioph
