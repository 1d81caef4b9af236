#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace ncineq {

// Counter-based generator built on the SplitMix64 bijection. A stream is
// (key, counter); output i is mix(key + i*GAMMA). Substreams re-key through
// the same mixer, so (seed, trial index) -> stream is a pure function and
// Monte Carlo results do not depend on thread count or draw interleaving
// between trials.
class Stream {
 public:
  static Stream from_seed(std::uint64_t seed) { return Stream(mix(seed ^ kSalt)); }

  Stream substream(std::uint64_t index) const {
    return Stream(mix(key_ ^ mix(index + kSalt)));
  }

  std::uint64_t next_u64() {
    std::uint64_t x = key_ + (++ctr_) * kGamma;
    return mix(x);
  }

  // Uniform on [0,1), 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1]; safe under log().
  double next_double_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double uniform_sym() { return 2.0 * next_double() - 1.0; }  // [-1,1)

  bool bernoulli(double p) { return next_double() < p; }

  int rademacher() { return (next_u64() & 1u) ? 1 : -1; }

  // Box-Muller, cosine branch; consumes exactly two draws per call so the
  // stream position is a pure function of the call count.
  double normal() {
    double u1 = next_double_pos();
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  // Standard complex gaussian, E|z|^2 = 1.
  std::complex<double> complex_gaussian() {
    double re = normal();
    double im = normal();
    return {re / kSqrt2, im / kSqrt2};
  }

 private:
  explicit Stream(std::uint64_t key) : key_(key) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kSalt = 0xA02F7F57D9C6E8B1ull;
  static constexpr double kPi = 3.14159265358979323846;
  static constexpr double kSqrt2 = 1.41421356237309504880;

  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace ncineq
