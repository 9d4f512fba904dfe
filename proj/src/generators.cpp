#include "pmin/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace pmin {

namespace {

long long pick_weight(std::mt19937_64& rng, int max_weight) {
    return 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(max_weight));
}

bool chance(std::mt19937_64& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

} // namespace

WeightedGraph random_connected_graph(int n, int max_weight, std::uint64_t seed,
                                     double extra_edge_prob) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: need at least one vertex");
    if (max_weight < 1) throw std::invalid_argument("random_connected_graph: need positive weights");
    std::mt19937_64 rng(seed);
    WeightedGraph g(n);
    for (int v = 1; v < n; ++v) {
        int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        g.add_edge(parent, v, pick_weight(rng, max_weight));
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && chance(rng, extra_edge_prob))
                g.add_edge(u, v, pick_weight(rng, max_weight));
    return g;
}

WeightedGraph random_graph(int n, int max_weight, std::uint64_t seed, double edge_prob) {
    if (n < 0) throw std::invalid_argument("random_graph: negative size");
    if (max_weight < 1) throw std::invalid_argument("random_graph: need positive weights");
    std::mt19937_64 rng(seed);
    WeightedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (chance(rng, edge_prob)) g.add_edge(u, v, pick_weight(rng, max_weight));
    return g;
}

WeightedGraph planted_two_weight_dense(int n, bool with_cycle) {
    if (n < 4) throw std::invalid_argument("planted_two_weight_dense: need at least four vertices");
    WeightedGraph g(n);
    g.add_edge(0, 1, 1);
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v, 2);
    if (with_cycle) g.add_edge(0, 2, 2);
    return g;
}

namespace {

// Shape builders below fill a weight map on n vertices; leftovers are attached
// at the end so every instance is connected.
using EdgeMap = std::map<std::pair<int, int>, long long>;

void put(EdgeMap& em, int u, int v, long long w) {
    if (u == v) return;
    em[{std::min(u, v), std::max(u, v)}] = w;
}

// Minimum-weight star at vertex 0 with heavier edges hanging off its leaves.
void shape_hub_star(EdgeMap& em, int n, std::mt19937_64& rng) {
    int leaves = 2 + static_cast<int>(rng() % 3);
    leaves = std::min(leaves, n - 1);
    for (int i = 1; i <= leaves; ++i) put(em, 0, i, 1);
    for (int v = leaves + 1; v < n; ++v) {
        int anchor = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(leaves));
        put(em, anchor, v, 2);
    }
    // A few heavy edges inside the leaf neighbourhood.
    for (int t = 0; t < n; ++t) {
        int u = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        int v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        if (u != v) put(em, u, v, 2);
    }
}

// One minimum edge {0,1} plus a dense block and an optional path back to 0.
void shape_single_min(EdgeMap& em, int n, std::mt19937_64& rng) {
    put(em, 0, 1, 1);
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (chance(rng, 0.7)) put(em, u, v, 2);
    if (chance(rng, 0.5) && n >= 3) put(em, 0, 2, 2);
    if (chance(rng, 0.3) && n >= 4) put(em, 0, 3, 2);
}

// Three weights: sigma2 fan at vertex 1, sigma3 edges linked through it.
void shape_three_weights(EdgeMap& em, int n, std::mt19937_64& rng) {
    put(em, 0, 1, 1);
    for (int v = 2; v < n; ++v) put(em, 1, v, 2);
    for (int t = 0; t < n; ++t) {
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u != v && !em.count({std::min(u, v), std::max(u, v)})) put(em, u, v, 3);
    }
}

// Two triangles sharing the minimum edge, plus noise.
void shape_book(EdgeMap& em, int n, std::mt19937_64& rng) {
    put(em, 0, 1, 1);
    put(em, 0, 2, 2);
    put(em, 1, 2, 2);
    if (n >= 4) {
        put(em, 0, 3, 2);
        put(em, 1, 3, 2);
    }
    for (int v = 4; v < n; ++v) put(em, static_cast<int>(rng() % 4), v, 2);
}

// Constant cycle with a lighter pendant edge at a random contact vertex.
void shape_pan(EdgeMap& em, int n, std::mt19937_64& rng) {
    int m = 3 + static_cast<int>(rng() % 2);
    m = std::min(m, n - 1);
    for (int i = 0; i < m; ++i) put(em, i, (i + 1) % m, 2);
    put(em, static_cast<int>(rng() % static_cast<std::uint64_t>(m)), m, 1);
    for (int v = m + 1; v < n; ++v) put(em, static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v, 2);
}

} // namespace

WeightedGraph random_structured_graph(int n, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("random_structured_graph: need at least four vertices");
    std::mt19937_64 rng(seed);
    EdgeMap em;
    switch (rng() % 5) {
    case 0: shape_hub_star(em, n, rng); break;
    case 1: shape_single_min(em, n, rng); break;
    case 2: shape_three_weights(em, n, rng); break;
    case 3: shape_book(em, n, rng); break;
    default: shape_pan(em, n, rng); break;
    }
    // Occasional mutation: bump one edge weight up or down.
    if (!em.empty() && chance(rng, 0.4)) {
        auto it = em.begin();
        std::advance(it, static_cast<long>(rng() % em.size()));
        long long w = it->second + (chance(rng, 0.5) ? 1 : -1);
        it->second = std::max(1LL, w);
    }
    WeightedGraph g(n);
    for (const auto& [uv, w] : em) g.add_edge(uv.first, uv.second, w);
    // Attach stray components so the instance stays connected.
    std::vector<int> comp = component_ids(g);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[static_cast<std::size_t>(comp[0])] = true;
    for (int v = 1; v < n; ++v) {
        if (seen[static_cast<std::size_t>(comp[v])]) continue;
        seen[static_cast<std::size_t>(comp[v])] = true;
        g.add_edge(0, v, 2);
    }
    return g;
}

WeightedGraph remap_weights_monotone(const WeightedGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::map<long long, long long> remap;
    for (const Edge& e : g.edges()) remap[e.w] = 0;
    long long next = 1 + static_cast<long long>(rng() % 5);
    for (auto& [w, target] : remap) {
        target = next;
        next += 1 + static_cast<long long>(rng() % 7);
    }
    WeightedGraph out(g.n());
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, remap[e.w]);
    return out;
}

} // namespace pmin
