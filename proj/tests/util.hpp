#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <vector>

#include "pmin/game.hpp"
#include "pmin/graph.hpp"
#include "pmin/partition.hpp"
#include "pmin/vertex_set.hpp"

namespace testutil {

struct E {
    int u, v;
    long long w;
};

// 0-based edge list, like the library's internal convention.
inline pmin::WeightedGraph make_graph(int n, std::initializer_list<E> edges) {
    pmin::WeightedGraph g(n);
    for (const E& e : edges) g.add_edge(e.u, e.v, e.w);
    return g;
}

inline pmin::VertexSet vs(int n, std::initializer_list<int> members) {
    return pmin::VertexSet::of(n, members);
}

// Blocks as sorted member lists, for order-insensitive comparisons.
inline std::vector<std::vector<int>> blocks_of(const pmin::Partition& p) {
    std::vector<std::vector<int>> out;
    for (const pmin::VertexSet& b : p.blocks) out.push_back(b.members());
    std::sort(out.begin(), out.end());
    return out;
}

// Definitional convexity check, kept separate from the library's pairwise
// shortcut so the two can arbitrate each other.
inline bool convex_by_definition(const pmin::Game& v) {
    for (pmin::Coalition a = 0; a <= v.full(); ++a)
        for (pmin::Coalition b = 0; b <= v.full(); ++b)
            if (pmin::delta(v, a, b) < 0) return false;
    return true;
}

// Every labeled graph on n vertices whose edges carry weights from `weights`
// (each vertex pair: absent or one of the listed weights), streamed to `fn`.
template <typename Fn>
void for_each_weighted_graph(int n, const std::vector<long long>& weights, Fn&& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const std::size_t options = weights.size() + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= options;
    for (std::size_t code = 0; code < total; ++code) {
        pmin::WeightedGraph g(n);
        std::size_t rest = code;
        for (const auto& [u, v] : pairs) {
            std::size_t pick = rest % options;
            rest /= options;
            if (pick > 0) g.add_edge(u, v, weights[pick - 1]);
        }
        fn(g);
    }
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace testutil
