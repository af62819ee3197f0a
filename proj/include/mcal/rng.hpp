#ifndef MCAL_RNG_HPP
#define MCAL_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace mcal {

/// Seeded generator for the randomized suites. Draws come straight off the
/// engine so the stream is identical on every platform.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next() { return eng(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : next() % n; }
};

}  // namespace mcal

#endif
