#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <vector>

namespace cliquegame {

// Seeded generators whose output does not depend on the standard library's
// distribution implementations: mt19937_64 and seed_seq are fully specified.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> tags = {}) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (auto t : tags) {
    words.push_back(static_cast<std::uint32_t>(t));
    words.push_back(static_cast<std::uint32_t>(t >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

// Uniform in [0, bound) by rejection.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t range = bound;
  const std::uint64_t limit = kMax - kMax % range;
  for (;;) {
    std::uint64_t r = rng();
    if (r < limit) return static_cast<std::size_t>(r % range);
  }
}

inline bool bernoulli(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace cliquegame
