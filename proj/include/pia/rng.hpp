#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace pia {

/// xoshiro256** generator seeded through SplitMix64.
///
/// Output is fully specified by the algorithm, so sequences are identical on
/// every platform and compiler. Satisfies UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  /// Independent stream for item `index` of a run seeded with `seed`.
  static Rng substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  result_type operator()() { return next(); }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double uniform();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

 private:
  std::array<std::uint64_t, 4> state_;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace pia
