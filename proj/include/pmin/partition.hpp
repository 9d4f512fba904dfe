#pragma once

#include <vector>

#include "pmin/graph.hpp"
#include "pmin/vertex_set.hpp"

namespace pmin {

// A partition of a carrier set into non-empty blocks, sorted by smallest member.
// The empty carrier is represented with no blocks.
struct Partition {
    VertexSet carrier;
    std::vector<VertexSet> blocks;

    bool operator==(const Partition& o) const { return carrier == o.carrier && blocks == o.blocks; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
};

Partition make_partition(const VertexSet& carrier, std::vector<VertexSet> blocks);

// Minimum-weight edges of the subgraph induced by `a` (empty when a spans no edge).
std::vector<Edge> sigma_min(const WeightedGraph& g, const VertexSet& a);

// Components of the induced subgraph after deleting its minimum-weight edges.
Partition p_min(const WeightedGraph& g, const VertexSet& a);

// Components of the induced subgraph.
Partition p_myerson(const WeightedGraph& g, const VertexSet& a);

// Non-empty traces of p's blocks on a sub-carrier `a` (requires a ⊆ carrier).
Partition restrict_to(const Partition& p, const VertexSet& a);

// True when every block of `finer` lies inside a block of `coarser`.
// Both arguments must share one carrier.
bool is_refinement(const Partition& finer, const Partition& coarser);

struct WeightSpectrum {
    std::vector<long long> weights; // distinct, ascending
    std::vector<int> counts;        // counts[i] = number of edges of weights[i]

    int k() const { return static_cast<int>(weights.size()); }
};

WeightSpectrum weight_spectrum(const WeightedGraph& g);

} // namespace pmin
