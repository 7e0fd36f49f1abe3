#pragma once

// Counter-based sampling: every draw is a pure function of (seed, sample, coordinate, attempt),
// so samples can be generated in any order or in parallel.

#include <cstdint>
#include <vector>

#include "supergroup/numeric.hpp"

namespace supergroup {

/// SplitMix64 output function applied to a 64-bit state.
std::uint64_t splitmix64(std::uint64_t state);

/// Hash of the draw coordinates through chained SplitMix64 rounds.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t sample, std::uint64_t coord, std::uint64_t attempt);

/// Uniform dyadic rational in [0, 1) with 53 bits.
BigRational unit_dyadic(std::uint64_t bits);

/// Point drawn uniformly from the closed complex disk |z| <= radius by rejection from the
/// enclosing square. Coordinates are exact dyadic multiples of the radius.
GaussianRational sample_disk_point(std::uint64_t seed, std::uint64_t sample, std::uint64_t coord, const BigRational& radius);

/// N disk points for one sample.
std::vector<GaussianRational> sample_disk(std::uint64_t seed, std::uint64_t sample, long count, const BigRational& radius);

}  // namespace supergroup
