#pragma once

#include <cstdint>
#include <random>

namespace pumpkin {

/// Seeded pseudorandom stream used by the generators.
///
/// The engine is std::mt19937_64, whose output sequence is fully pinned by
/// the standard.  The mappings below are spelled out explicitly because the
/// std::*_distribution adapters are implementation-defined, and generated
/// corpora must be byte-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// True with probability p (clamped to [0,1]); consumes one engine step.
  bool bernoulli(double p) {
    std::uint64_t draw = next_u64() >> 11;  // top 53 bits, exact in double
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return static_cast<double>(draw) < p * 9007199254740992.0;  // p * 2^53
  }

  /// Uniform in [0, bound); rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pumpkin
