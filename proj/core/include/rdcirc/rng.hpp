#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rdcirc {

/// Cheap seed mixer so nearby (seed, stream) pairs land far apart.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Fisher-Yates with a hand-rolled bounded draw: std::shuffle and
/// uniform_int_distribution differ across standard libraries, and training
/// runs must be reproducible bit-for-bit everywhere.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace rdcirc
