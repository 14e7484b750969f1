#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chromaprob/rational.hpp"

namespace chromaprob {

using Rng = std::mt19937_64;

// unbiased integer in [0, n); rejection sampling keeps results identical
// across standard library implementations
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// throws `total` unit masses into `parts` bins; multinomial spread around uniform
inline std::vector<int> random_composition(Rng& rng, int total, int parts) {
    std::vector<int> bins(parts, 0);
    for (int i = 0; i < total; ++i) bins[uniform_below(rng, parts)]++;
    return bins;
}

inline std::vector<Rational> composition_to_simplex(const std::vector<int>& bins, int total) {
    std::vector<Rational> p;
    p.reserve(bins.size());
    for (int b : bins) p.emplace_back(Int(b), Int(total));
    return p;
}

}  // namespace chromaprob
