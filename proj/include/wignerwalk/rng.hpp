#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace wignerwalk {

// SplitMix64: tiny, fast, full-period 64-bit generator. Chosen over
// std::mt19937 because its output stream is fixed by construction (no
// library-dependent state transitions), which the deterministic ensemble
// sweep relies on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1]; strictly positive so log() stays finite.
  double next_open_unit() {
    return static_cast<double>((next() >> 11) + 1) * 0x1p-53;
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1p-53; }

 private:
  std::uint64_t state_;
};

// Standard normal deviates via Box-Muller. std::normal_distribution is
// avoided for the same reason as std::mt19937: its draw sequence is
// implementation-defined, and sampled disorder must be reproducible
// bit-for-bit from the seed alone.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = rng_.next_open_unit();
    const double u2 = rng_.next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  SplitMix64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace wignerwalk
