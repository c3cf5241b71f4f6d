#pragma once

// Seeded randomness with platform-independent derived draws. The standard
// distributions are implementation-defined, so bounded integers and shuffles
// are done by hand on top of mt19937_64.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace expforge {

using Rng = std::mt19937_64;

// splitmix64 finalizer over seed ^ salt.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Uniform in [0, bound), bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Uniform in [0, 1).
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class T>
void shuffle_in_place(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

// Uniform s-subset of [0, n), sorted (Floyd's algorithm).
inline std::vector<std::uint32_t> sample_subset(Rng& rng, std::uint32_t n, std::uint32_t s) {
  std::vector<std::uint32_t> out;
  out.reserve(s);
  for (std::uint32_t j = n - s; j < n; ++j) {
    const auto t = static_cast<std::uint32_t>(uniform_below(rng, j + 1ull));
    if (std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(t);
    } else {
      out.push_back(j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace expforge
