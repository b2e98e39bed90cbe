#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "multipers/blocks.hpp"
#include "multipers/fibered.hpp"
#include "multipers/presentation.hpp"

namespace multipers {

/// Seeded instance generators; identical seeds give identical instances.
class instance_generator {
 public:
  explicit instance_generator(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// Uniform multiple of 1/den in [lo, hi].
  rational fraction(long lo, long hi, long den);

  /// Staircase interval with up to `max_steps` births on the integer lattice [0, span)^2.
  presentation staircase(std::size_t max_steps, long span, prime_field field = prime_field(2));

  /// Direct sum of `summands` random staircases.
  presentation staircase_sum(std::size_t summands, std::size_t max_steps, long span, prime_field field = prime_field(2));

  /// Homogeneous presentation with random grades on multiples of 1/den in [0, span]^n.
  presentation general(std::size_t n, std::size_t generators, std::size_t relations, long span, long den,
                       prime_field field = prime_field(2));

  /// One-parameter presentation with at most `max_generators` generators.
  presentation one_parameter(std::size_t max_generators, long span, long den, prime_field field = prime_field(2));

  /// Barcode with at most `max_bars` bars on multiples of 1/den in [0, span].
  barcode bars(std::size_t max_bars, long span, long den);

  /// Block of the given kind with endpoints on multiples of 1/den in [-span, span].
  block random_block(block_kind kind, long span, long den);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace multipers
