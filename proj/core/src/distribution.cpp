#include "chromaprob/distribution.hpp"

#include <sstream>

namespace chromaprob {

Distribution make_distribution(std::vector<Rational> entries) {
    if (entries.empty()) throw std::invalid_argument("distribution needs at least one entry");
    Rational sum = 0;
    for (const auto& x : entries) {
        if (x < 0) throw std::invalid_argument("distribution entries must be nonnegative");
        sum += x;
    }
    if (sum != 1) throw std::invalid_argument("distribution entries must sum to exactly 1");
    return Distribution{std::move(entries)};
}

Distribution uniform_distribution(int q) {
    if (q < 1) throw std::invalid_argument("uniform distribution needs q >= 1");
    return Distribution{std::vector<Rational>(q, Rational(1, q))};
}

bool is_uniform(const Distribution& d) {
    Rational share(1, d.size());
    for (const auto& x : d.p)
        if (x != share) return false;
    return true;
}

Distribution parse_distribution(const std::string& text) {
    if (text.rfind("uniform:", 0) == 0) {
        std::string tail = text.substr(8);
        std::size_t pos = 0;
        int q;
        try {
            q = std::stoi(tail, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad palette size in '" + text + "'");
        }
        if (pos != tail.size()) throw std::invalid_argument("bad palette size in '" + text + "'");
        return uniform_distribution(q);
    }
    std::vector<Rational> entries;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) entries.push_back(parse_rational(item));
    if (!text.empty() && text.back() == ',')
        throw std::invalid_argument("trailing comma in distribution");
    return make_distribution(std::move(entries));
}

std::string format_distribution(const Distribution& d) {
    std::string out;
    for (int i = 0; i < d.size(); ++i) {
        if (i) out += ',';
        out += rational_to_string(d[i]);
    }
    return out;
}

}  // namespace chromaprob
