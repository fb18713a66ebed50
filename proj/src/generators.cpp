#include "fibercount/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "fibercount/errors.hpp"
#include "fibercount/paths.hpp"

namespace fibercount {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed) ^ mix64(index + 1));
}

RngStream RngStream::substream(std::uint64_t seed, std::uint64_t index) {
    return RngStream(split_seed(seed, index));
}

std::uint64_t RngStream::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("RngStream: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

Graph gen_ba(int n, int m, RngStream& rng) {
    if (m < 1 || n <= m) throw std::invalid_argument("gen_ba: requires n > m >= 1");
    Graph g(n);
    // complete seed graph on m+1 vertices; every later vertex then has m
    // distinct attachment targets available
    std::vector<int> targets;  // vertex v appears degree(v) times
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) g.add_edge(i, j);
    for (int i = 0; i <= m; ++i)
        for (int rep = 0; rep < m; ++rep) targets.push_back(i);

    std::vector<int> picked;
    for (int v = m + 1; v < n; ++v) {
        picked.clear();
        while (static_cast<int>(picked.size()) < m) {
            const int candidate = targets[rng.below(targets.size())];
            if (std::find(picked.begin(), picked.end(), candidate) != picked.end()) continue;
            picked.push_back(candidate);
        }
        for (int t : picked) {
            g.add_edge(v, t);
            targets.push_back(t);
            targets.push_back(v);
        }
    }
    return g;
}

Graph gen_er_gnm(int n, std::int64_t m_edges, RngStream& rng) {
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m_edges < 0 || m_edges > max_edges)
        throw std::invalid_argument("gen_er_gnm: edge count out of [0, C(n,2)]");

    // row_start[i] = id of pair (i, i+1); pair ids are lexicographic
    std::vector<std::int64_t> row_start(static_cast<std::size_t>(std::max(n, 1)), 0);
    for (int i = 1; i < n; ++i)
        row_start[static_cast<std::size_t>(i)] =
            row_start[static_cast<std::size_t>(i - 1)] + (n - i);

    Graph g(n);
    std::unordered_set<std::int64_t> used;
    while (static_cast<std::int64_t>(used.size()) < m_edges) {
        const std::int64_t id = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_edges)));
        if (!used.insert(id).second) continue;
        const auto row = std::upper_bound(row_start.begin(), row_start.end(), id) - row_start.begin() - 1;
        const int i = static_cast<int>(row);
        const int j = i + 1 + static_cast<int>(id - row_start[static_cast<std::size_t>(i)]);
        g.add_edge(i, j);
    }
    return g;
}

namespace {

// Degree-preserving double-edge-swap randomization; mutates the edge list in
// place until `wanted` swaps have been accepted.
void randomize_by_edge_swaps(int n, std::vector<Edge>& edges, RngStream& rng,
                             std::int64_t wanted) {
    if (edges.size() < 2 || wanted <= 0) return;
    auto edge_key = [n](int a, int b) {
        return static_cast<std::int64_t>(std::min(a, b)) * n + std::max(a, b);
    };
    std::unordered_set<std::int64_t> present;
    for (const Edge& e : edges) present.insert(edge_key(e.u, e.v));

    std::int64_t accepted = 0;
    while (accepted < wanted) {
        const std::size_t x = static_cast<std::size_t>(rng.below(edges.size()));
        const std::size_t y = static_cast<std::size_t>(rng.below(edges.size()));
        if (x == y) continue;
        int a = edges[x].u, b = edges[x].v;
        int c = edges[y].u, d = edges[y].v;
        if (rng.below(2) == 1) std::swap(c, d);
        // proposed replacement: (a,c) and (b,d)
        if (a == c || b == d || a == d || b == c) continue;
        if (present.count(edge_key(a, c)) || present.count(edge_key(b, d))) continue;
        present.erase(edge_key(a, b));
        present.erase(edge_key(c, d));
        present.insert(edge_key(a, c));
        present.insert(edge_key(b, d));
        edges[x] = Edge(a, c);
        edges[y] = Edge(b, d);
        ++accepted;
    }
}

}  // namespace

Graph gen_config_uniform(const DegreeSequence& d, RngStream& rng, int max_retries) {
    d.validate();
    const int n = d.size();

    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
        for (int rep = 0; rep < d.degrees[static_cast<std::size_t>(v)]; ++rep) stubs.push_back(v);

    auto edge_key = [n](int a, int b) {
        return static_cast<std::int64_t>(std::min(a, b)) * n + std::max(a, b);
    };

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        // Fisher-Yates shuffle, then pair consecutive stubs
        for (std::size_t i = stubs.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(rng.below(i));
            std::swap(stubs[i - 1], stubs[j]);
        }
        bool simple = true;
        std::unordered_set<std::int64_t> seen;
        for (std::size_t t = 0; t + 1 < stubs.size(); t += 2) {
            const int a = stubs[t], b = stubs[t + 1];
            if (a == b || !seen.insert(edge_key(a, b)).second) {
                simple = false;
                break;
            }
        }
        if (!simple) continue;
        Graph g(n);
        for (std::size_t t = 0; t + 1 < stubs.size(); t += 2) g.add_edge(stubs[t], stubs[t + 1]);
        return g;
    }

    // fallback: deterministic construction randomized by edge swaps
    EdgePath path = havel_hakimi_path(degree_distribution(d));
    // havel_hakimi_path assigns ascending degrees to vertices 0..n-1; map
    // slot k back to the k-th vertex of d in (degree, index) order
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int da = d.degrees[static_cast<std::size_t>(a)];
        const int db = d.degrees[static_cast<std::size_t>(b)];
        return da != db ? da < db : a < b;
    });
    std::vector<Edge> edges;
    edges.reserve(path.ordered_edges.size());
    for (const Edge& e : path.ordered_edges)
        edges.emplace_back(order[static_cast<std::size_t>(e.u)], order[static_cast<std::size_t>(e.v)]);

    randomize_by_edge_swaps(n, edges, rng, 10 * static_cast<std::int64_t>(edges.size()));
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

}  // namespace fibercount
