#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace textknn::rng {

// std::uniform_int_distribution and std::shuffle are implementation-defined,
// so seeded runs would not reproduce across standard libraries. Everything
// random in this project goes through the two helpers below; mt19937_64
// itself is fully specified by the standard.

/// Unbiased draw from [0, bound) by rejection sampling. bound must be >= 1.
inline std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = gen();
    if (r >= threshold) return r % bound;
  }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Fisher-Yates shuffle driven by uniform_index.
template <typename T>
void shuffle(std::vector<T>& values, std::mt19937_64& gen) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_index(gen, i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace textknn::rng
