#include "chromaprob/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace chromaprob {

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, std::move(e));
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, std::move(e));
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star graph needs >= 1 leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return build_graph(leaves + 1, std::move(e));
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs both sides >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return build_graph(a + b, std::move(e));
}

Graph ternary_tree_graph(int k) {
    if (k < 1) throw std::invalid_argument("ternary tree needs depth parameter k >= 1");
    int depth = 2 * k;
    // layer j holds 2^j vertices in breadth-first order
    long long total = (1LL << (depth + 1)) - 1;
    if (total > 1'000'000) throw std::invalid_argument("ternary tree too deep");
    std::vector<std::pair<int, int>> e;
    for (long long v = 1; v < total; ++v) e.emplace_back((int)((v - 1) / 2), (int)v);
    return build_graph((int)total, std::move(e));
}

Graph figure1_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j) e.emplace_back(i, j);
    for (int i = 6; i < 12; ++i) e.emplace_back(i, 18);
    for (int i = 0; i < 6; ++i) e.emplace_back(i, 12 + i);
    return build_graph(19, std::move(e));
}

Graph named_graph(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto colon = spec.find(':', start);
        parts.push_back(spec.substr(start, colon == std::string::npos ? colon : colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    auto want_params = [&](std::size_t k) {
        if (parts.size() != k + 1)
            throw std::invalid_argument("graph kind '" + parts[0] + "' takes " +
                                        std::to_string(k) + " parameter(s)");
    };
    auto num = [&](std::size_t i) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(parts[i], &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad numeric parameter '" + parts[i] + "'");
        }
        if (pos != parts[i].size())
            throw std::invalid_argument("bad numeric parameter '" + parts[i] + "'");
        return v;
    };
    const std::string& kind = parts[0];
    if (kind == "complete") { want_params(1); return complete_graph(num(1)); }
    if (kind == "path") { want_params(1); return path_graph(num(1)); }
    if (kind == "cycle") { want_params(1); return cycle_graph(num(1)); }
    if (kind == "star") { want_params(1); return star_graph(num(1)); }
    if (kind == "complete_bipartite") { want_params(2); return complete_bipartite_graph(num(1), num(2)); }
    if (kind == "ternary_tree") { want_params(1); return ternary_tree_graph(num(1)); }
    if (kind == "figure1") { want_params(0); return figure1_graph(); }
    throw std::invalid_argument("unknown graph kind '" + kind + "'");
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n, false);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> bfs;
        bfs.push(s);
        seen[s] = true;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            comp.push_back(u);
            for (int w : g.adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    bfs.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return connected_components(g).size() == 1;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> side(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<int> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int w : g.adj[u]) {
                if (side[w] == -1) {
                    side[w] = side[u] ^ 1;
                    bfs.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
    return d;
}

long long triangle_count(const Graph& g) {
    long long t = 0;
    for (auto [u, v] : g.edges) {
        // merge-count common neighbors above v to count each triangle once
        const auto& a = g.adj[u];
        const auto& b = g.adj[v];
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) ++i;
            else if (a[i] > b[j]) ++j;
            else {
                if (a[i] > v) ++t;
                ++i;
                ++j;
            }
        }
    }
    return t;
}

bool is_claw_free(const Graph& g) {
    for (int c = 0; c < g.n; ++c) {
        const auto& nb = g.adj[c];
        std::size_t d = nb.size();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < d; ++k)
                    if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) return false;
            }
    }
    return true;
}

bool is_tree(const Graph& g) {
    return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g);
}

Int spanning_tree_count(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("spanning trees undefined for the empty graph");
    if (g.n == 1) return 1;
    int m = g.n - 1;
    std::vector<std::vector<Int>> a(m, std::vector<Int>(m, 0));
    for (int v = 0; v < m; ++v) a[v][v] = g.degree(v);
    for (auto [u, v] : g.edges) {
        if (u < m && v < m) {
            a[u][v] -= 1;
            a[v][u] -= 1;
        }
    }
    // Bareiss fraction-free elimination; divisions are exact
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < m; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < m; ++r)
                if (a[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot == -1) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int r = k + 1; r < m; ++r)
            for (int c = k + 1; c < m; ++c)
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
        prev = a[k][k];
    }
    Int det = a[m - 1][m - 1];
    return sign > 0 ? det : -det;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> label(g.n, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
        if (label[v] != -1) throw std::invalid_argument("duplicate vertex in induced set");
        label[v] = (int)i;
    }
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges)
        if (label[u] != -1 && label[v] != -1) e.emplace_back(label[u], label[v]);
    return build_graph((int)vertices.size(), std::move(e));
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> e;
    e.reserve(g.edges.size());
    for (auto edge : g.edges)
        if (edge != std::make_pair(u, v)) e.push_back(edge);
    return build_graph(g.n, std::move(e));
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("cannot contract a vertex with itself");
    if (u > v) std::swap(u, v);
    std::vector<int> label(g.n);
    int next = 0;
    for (int w = 0; w < g.n; ++w) label[w] = (w == v) ? -1 : next++;
    label[v] = label[u];
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g.edges) {
        int x = label[a], y = label[b];
        if (x != y) e.emplace_back(x, y);
    }
    return build_graph(g.n - 1, std::move(e));
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    if (g.n > 64) throw std::invalid_argument("adjacency masks need n <= 64");
    std::vector<std::uint64_t> masks(g.n, 0);
    for (auto [u, v] : g.edges) {
        masks[u] |= std::uint64_t(1) << v;
        masks[v] |= std::uint64_t(1) << u;
    }
    return masks;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list must start with 'n m'");
    if (n < 0 || m < 0) throw std::invalid_argument("negative counts in edge list header");
    std::vector<std::pair<int, int>> e;
    e.reserve((std::size_t)m);
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list ended early at edge " + std::to_string(i + 1));
        e.emplace_back((int)u, (int)v);
    }
    long long extra;
    if (in >> extra) throw std::invalid_argument("trailing data after declared edges");
    return build_graph((int)n, std::move(e));
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace chromaprob
