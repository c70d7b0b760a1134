#pragma once

#include <cstdint>
#include <random>

namespace weylfold {

// Seeded generator for the randomized checks; mt19937_64 has a fixed,
// portable output sequence, and we avoid std distributions so that reports
// are byte-identical across standard libraries.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace weylfold
