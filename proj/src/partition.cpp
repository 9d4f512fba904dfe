#include "pmin/partition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pmin {

Partition make_partition(const VertexSet& carrier, std::vector<VertexSet> blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    return Partition{carrier, std::move(blocks)};
}

std::vector<Edge> sigma_min(const WeightedGraph& g, const VertexSet& a) {
    std::vector<int> verts = a.members();
    long long best = std::numeric_limits<long long>::max();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) best = std::min(best, g.weight(verts[i], verts[j]));
    std::vector<Edge> out;
    if (best == std::numeric_limits<long long>::max()) return out;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.weight(verts[i], verts[j]) == best) out.push_back({verts[i], verts[j], best});
    return out;
}

namespace {

// Components of the subgraph induced by `a`, keeping only edges accepted by `keep`.
template <typename EdgeFilter>
Partition filtered_components(const WeightedGraph& g, const VertexSet& a, EdgeFilter keep) {
    std::vector<int> verts = a.members();
    std::vector<int> parent(g.n());
    for (int v : verts) parent[v] = v;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            long long w = g.weight(verts[i], verts[j]);
            if (w != 0 && keep(w)) parent[find(verts[i])] = find(verts[j]);
        }
    }
    std::vector<VertexSet> blocks;
    std::vector<int> block_index(g.n(), -1);
    for (int v : verts) {
        int r = find(v);
        if (block_index[r] == -1) {
            block_index[r] = static_cast<int>(blocks.size());
            blocks.emplace_back(g.n());
        }
        blocks[block_index[r]].set(v);
    }
    return make_partition(a, std::move(blocks));
}

} // namespace

Partition p_min(const WeightedGraph& g, const VertexSet& a) {
    std::vector<Edge> sigma = sigma_min(g, a);
    if (sigma.empty()) return filtered_components(g, a, [](long long) { return false; });
    long long minw = sigma.front().w;
    return filtered_components(g, a, [minw](long long w) { return w != minw; });
}

Partition p_myerson(const WeightedGraph& g, const VertexSet& a) {
    return filtered_components(g, a, [](long long) { return true; });
}

Partition restrict_to(const Partition& p, const VertexSet& a) {
    if (!a.subset_of(p.carrier))
        throw std::invalid_argument("restrict_to: set is not contained in the carrier");
    std::vector<VertexSet> blocks;
    for (const VertexSet& b : p.blocks) {
        VertexSet t = b & a;
        if (t.any()) blocks.push_back(std::move(t));
    }
    return make_partition(a, std::move(blocks));
}

bool is_refinement(const Partition& finer, const Partition& coarser) {
    if (finer.carrier != coarser.carrier)
        throw std::invalid_argument("is_refinement: partitions have different carriers");
    for (const VertexSet& b : finer.blocks) {
        bool inside = false;
        for (const VertexSet& c : coarser.blocks) {
            if (b.subset_of(c)) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

namespace {

// Sort-based fallback for graphs with many distinct weights.
WeightSpectrum spectrum_by_sort(const WeightedGraph& g) {
    std::vector<long long> ws;
    ws.reserve(g.edges().size());
    for (const Edge& e : g.edges()) ws.push_back(e.w);
    std::sort(ws.begin(), ws.end());
    WeightSpectrum s;
    for (long long w : ws) {
        if (s.weights.empty() || s.weights.back() != w) {
            s.weights.push_back(w);
            s.counts.push_back(1);
        } else {
            ++s.counts.back();
        }
    }
    return s;
}

} // namespace

WeightSpectrum weight_spectrum(const WeightedGraph& g) {
    // Graphs of interest carry a handful of distinct weights, so one pass
    // with an insertion-sorted table beats sorting the full edge multiset.
    constexpr std::size_t kFlatLimit = 64;
    WeightSpectrum s;
    for (const Edge& e : g.edges()) {
        auto it = std::lower_bound(s.weights.begin(), s.weights.end(), e.w);
        std::size_t at = static_cast<std::size_t>(it - s.weights.begin());
        if (it != s.weights.end() && *it == e.w) {
            ++s.counts[at];
            continue;
        }
        if (s.weights.size() == kFlatLimit) return spectrum_by_sort(g);
        s.weights.insert(it, e.w);
        s.counts.insert(s.counts.begin() + static_cast<std::ptrdiff_t>(at), 1);
    }
    return s;
}

} // namespace pmin
