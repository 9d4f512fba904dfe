#pragma once

#include <cstdint>

#include "pmin/graph.hpp"

namespace pmin {

// Spanning tree plus random extra edges, weights uniform in {1..max_weight}.
// Deterministic per seed.
WeightedGraph random_connected_graph(int n, int max_weight, std::uint64_t seed,
                                     double extra_edge_prob = 0.3);

// Independent edges with the given probability; possibly disconnected.
WeightedGraph random_graph(int n, int max_weight, std::uint64_t seed, double edge_prob = 0.3);

// Two-weight instance with a single minimum edge and a dense complete block;
// with_cycle threads one chordless cycle through the minimum edge. The
// structural decision runs its full path (BFS, articulation points,
// completeness scans) and returns Inherits.
WeightedGraph planted_two_weight_dense(int n, bool with_cycle);

// Structure-biased random instance: hub stars, single-minimum blocks,
// three-weight chains, shared-edge cycle books, pans — with occasional
// mutations. Covers the interesting decision paths far more often than
// uniform noise.
WeightedGraph random_structured_graph(int n, std::uint64_t seed);

// Re-maps the distinct weights through a random strictly increasing function.
WeightedGraph remap_weights_monotone(const WeightedGraph& g, std::uint64_t seed);

} // namespace pmin
