#include "chromaprob/poset.hpp"

#include <sstream>
#include <stdexcept>

namespace chromaprob {

Poset build_poset(int n, const std::vector<std::pair<int, int>>& relations) {
    if (n < 0) throw std::invalid_argument("poset size must be nonnegative");
    Poset p;
    p.n = n;
    p.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) p.leq[i][i] = true;
    for (auto [a, b] : relations) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("poset relation endpoint out of range");
        p.leq[a][b] = true;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!p.leq[i][k]) continue;
            for (int j = 0; j < n; ++j)
                if (p.leq[k][j]) p.leq[i][j] = true;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.leq[i][j] && p.leq[j][i])
                throw std::invalid_argument("relation closure violates antisymmetry at " +
                                            std::to_string(i) + "," + std::to_string(j));
    return p;
}

Poset parse_poset(const std::string& text) {
    std::istringstream in(text);
    long long n, k;
    if (!(in >> n >> k)) throw std::invalid_argument("poset input must start with 'n k'");
    if (n < 0 || k < 0) throw std::invalid_argument("negative counts in poset header");
    std::vector<std::pair<int, int>> rel;
    for (long long i = 0; i < k; ++i) {
        long long a, b;
        if (!(in >> a >> b))
            throw std::invalid_argument("poset input ended early at relation " + std::to_string(i + 1));
        rel.emplace_back((int)a, (int)b);
    }
    long long extra;
    if (in >> extra) throw std::invalid_argument("trailing data after declared relations");
    return build_poset((int)n, rel);
}

Graph incomparability_graph(const Poset& p) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j)
            if (!p.comparable(i, j)) e.emplace_back(i, j);
    return build_graph(p.n, std::move(e));
}

bool is_3plus1_free(const Poset& p) {
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < p.n; ++b) {
            if (a == b || !p.leq[a][b]) continue;
            for (int c = 0; c < p.n; ++c) {
                if (c == a || c == b || !p.leq[b][c]) continue;
                for (int d = 0; d < p.n; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (!p.comparable(d, a) && !p.comparable(d, b) && !p.comparable(d, c))
                        return false;
                }
            }
        }
    return true;
}

Poset random_poset(Rng& rng, int n, int relation_attempts) {
    // sample relations consistent with the vertex order so the closure is acyclic
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < relation_attempts; ++i) {
        int a = (int)uniform_below(rng, n);
        int b = (int)uniform_below(rng, n);
        if (a < b) rel.emplace_back(a, b);
    }
    return build_poset(n, rel);
}

}  // namespace chromaprob
