#include "supergroup/sampling.hpp"

#include <stdexcept>

namespace supergroup {

std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t sample, std::uint64_t coord, std::uint64_t attempt) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ sample);
  h = splitmix64(h ^ coord);
  return splitmix64(h ^ attempt);
}

BigRational unit_dyadic(std::uint64_t bits) {
  BigInt num;
  const std::uint64_t top = bits >> 11;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof top, 0, 0, &top);
  BigInt den = 1;
  den <<= 53;
  return make_rational(num, den);
}

GaussianRational sample_disk_point(std::uint64_t seed, std::uint64_t sample, std::uint64_t coord, const BigRational& radius) {
  if (sgn(radius) < 0) throw std::invalid_argument("radius must be non-negative");
  for (std::uint64_t attempt = 0;; attempt += 2) {
    const BigRational x = 2 * unit_dyadic(counter_hash(seed, sample, coord, attempt)) - 1;
    const BigRational y = 2 * unit_dyadic(counter_hash(seed, sample, coord, attempt + 1)) - 1;
    if (x * x + y * y <= 1) return {BigRational(x * radius), BigRational(y * radius)};
  }
}

std::vector<GaussianRational> sample_disk(std::uint64_t seed, std::uint64_t sample, long count, const BigRational& radius) {
  std::vector<GaussianRational> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long c = 0; c < count; ++c) out.push_back(sample_disk_point(seed, sample, static_cast<std::uint64_t>(c), radius));
  return out;
}

}  // namespace supergroup
