#pragma once

#include <string>
#include <vector>

#include "chromaprob/rational.hpp"

namespace chromaprob {

// probability vector over a fixed palette; entries are exact, nonnegative,
// and sum to exactly 1
struct Distribution {
    std::vector<Rational> p;

    int size() const { return (int)p.size(); }
    const Rational& operator[](int i) const { return p[i]; }
};

Distribution make_distribution(std::vector<Rational> entries);
Distribution uniform_distribution(int q);
bool is_uniform(const Distribution& d);

// accepts "2/5,3/5" or "uniform:365"
Distribution parse_distribution(const std::string& text);
std::string format_distribution(const Distribution& d);

}  // namespace chromaprob
