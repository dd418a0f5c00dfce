#pragma once

#include <cstdint>
#include <random>

namespace ctrlset {

/// Deterministic PRNG used wherever the library needs randomness.
///
/// The engine is std::mt19937_64, which the C++ standard specifies exactly,
/// seeded directly with the user-provided seed. The derived draws below use
/// raw engine output only; std::*_distribution types are avoided because
/// their algorithms are implementation-defined and would break cross-platform
/// reproducibility of seeded graphs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Unbiased integer in [0, bound) by masked rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      const std::uint64_t r = eng_() & mask;
      if (r < bound) return r;
    }
  }

  /// Double in [0, 1) built from the top 53 bits of one engine draw.
  double next_double() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ctrlset
