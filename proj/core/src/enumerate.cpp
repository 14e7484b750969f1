#include "chromaprob/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace chromaprob {

int pair_slot(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    // pairs ordered (0,1),(0,2),...,(0,n-1),(1,2),...
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

EdgeMask edge_mask_of(const Graph& g) {
    if (g.n > 16) throw std::invalid_argument("edge masks need n <= 16");
    EdgeMask mask = 0;
    for (auto [u, v] : g.edges) mask |= EdgeMask(1) << pair_slot(g.n, u, v);
    return mask;
}

Graph graph_from_edge_mask(int n, EdgeMask mask) {
    std::vector<std::pair<int, int>> e;
    int slot = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++slot)
            if ((mask >> slot) & 1) e.emplace_back(u, v);
    return build_graph(n, std::move(e));
}

namespace {

// iterated degree refinement: stable vertex classes ordered by invariant
std::vector<int> refinement_classes(const Graph& g) {
    int n = g.n;
    std::vector<int> cls(n, 0);
    int count = 1;
    while (true) {
        // signature: own class plus sorted neighbor classes
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.reserve(g.adj[v].size() + 1);
            s.push_back(cls[v]);
            for (int w : g.adj[v]) s.push_back(cls[w]);
            std::sort(s.begin() + 1, s.end());
            sigs[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> ids;
        for (auto& [s, v] : sigs) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        std::vector<int> fresh(n);
        for (auto& [s, v] : sigs) fresh[v] = ids[s];
        if (next == count) return fresh;
        count = next;
        cls = std::move(fresh);
    }
}

constexpr long long kMaxCompatiblePerms = 2'000'000;

EdgeMask min_mask_over_class_perms(const Graph& g, const std::vector<int>& cls) {
    int n = g.n;
    // vertices grouped by class define the blocks we may permute within
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return cls[a] != cls[b] ? cls[a] < cls[b] : a < b;
    });
    std::vector<std::pair<int, int>> blocks;  // [begin, end) ranges in `order`
    long long perms = 1;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && cls[order[j]] == cls[order[i]]) ++j;
        blocks.emplace_back(i, j);
        for (int k = 2; k <= j - i; ++k) {
            perms *= k;
            if (perms > kMaxCompatiblePerms)
                throw resource_limit_error("canonical form: too many symmetric vertices");
        }
        i = j;
    }
    std::vector<int> label(n);
    EdgeMask best = ~EdgeMask(0);
    while (true) {
        for (int i = 0; i < n; ++i) label[order[i]] = i;
        EdgeMask mask = 0;
        for (auto [u, v] : g.edges) mask |= EdgeMask(1) << pair_slot(n, label[u], label[v]);
        if (mask < best) best = mask;
        // odometer over per-block permutations
        std::size_t b = 0;
        for (; b < blocks.size(); ++b) {
            auto [lo, hi] = blocks[b];
            if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
        }
        if (b == blocks.size()) break;
    }
    return best;
}

}  // namespace

std::string canonical_key(const Graph& g) {
    if (g.n > 16) throw std::invalid_argument("canonical keys need n <= 16");
    EdgeMask best = g.n == 0 ? EdgeMask(0) : min_mask_over_class_perms(g, refinement_classes(g));
    std::string key(17, '\0');
    key[0] = (char)g.n;
    for (int i = 0; i < 16; ++i) key[1 + i] = (char)((best >> (8 * i)) & 0xff);
    return key;
}

namespace {

struct MaskView {
    int n;
    std::vector<std::uint32_t> adj;

    explicit MaskView(int n_) : n(n_), adj(n_, 0) {}

    void load(EdgeMask mask) {
        std::fill(adj.begin(), adj.end(), 0);
        int slot = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++slot)
                if ((mask >> slot) & 1) {
                    adj[u] |= 1u << v;
                    adj[v] |= 1u << u;
                }
    }

    bool connected() const {
        if (n == 0) return true;
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v)
                if ((frontier >> v) & 1) next |= adj[v];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (n >= 32 ? ~0u : (1u << n) - 1);
    }

    int degree_max() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, __builtin_popcount(adj[v]));
        return d;
    }

    bool claw_free() const {
        for (int c = 0; c < n; ++c) {
            std::vector<int> nb;
            for (int v = 0; v < n; ++v)
                if ((adj[c] >> v) & 1) nb.push_back(v);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    if ((adj[nb[i]] >> nb[j]) & 1) continue;
                    for (std::size_t k = j + 1; k < nb.size(); ++k)
                        if (!((adj[nb[i]] >> nb[k]) & 1) && !((adj[nb[j]] >> nb[k]) & 1))
                            return false;
                }
        }
        return true;
    }
};

}  // namespace

void for_each_graph_class(int n, const GraphClassOptions& options,
                          const std::function<void(const Graph&)>& fn) {
    if (n < 0 || n > 8)
        throw std::invalid_argument("graph class enumeration supports 0 <= n <= 8");
    int slots = n * (n - 1) / 2;
    MaskView view(n);
    std::unordered_set<std::string> seen;
    for (EdgeMask mask = 0; mask < (EdgeMask(1) << slots); ++mask) {
        view.load(mask);
        if (options.connected_only && !view.connected()) continue;
        if (options.max_degree >= 0 && view.degree_max() > options.max_degree) continue;
        if (options.claw_free != -1 && view.claw_free() != (options.claw_free == 1)) continue;
        Graph g = graph_from_edge_mask(n, mask);
        if (seen.insert(canonical_key(g)).second) fn(g);
    }
}

Graph random_graph(Rng& rng, int n, double edge_prob) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double roll = (double)uniform_below(rng, std::uint64_t(1) << 53) / (double)(std::uint64_t(1) << 53);
            if (roll < edge_prob) e.emplace_back(u, v);
        }
    return build_graph(n, std::move(e));
}

}  // namespace chromaprob
