#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace octa {

// All randomness goes through std::mt19937_64 (whose output stream the
// standard fixes) and the two helpers below, so seeded runs are reproducible
// across standard libraries.

/// Uniform value in [0, n), n >= 1: draw x until x < 2^64 - (2^64 mod n),
/// return x mod n.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t reject_from = -n % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= reject_from) return x % n;
  }
}

/// Fisher-Yates: for i from size-1 down to 1, swap v[i] with
/// v[uniform_below(i + 1)].
template <class T>
void shuffle_in_place(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace octa
