#pragma once

#include <vector>

#include "pmin/graph.hpp"

namespace pmin {

struct BiconnectedComponent {
    std::vector<int> vertices; // sorted
    std::vector<Edge> edges;
};

struct BiconnectedDecomposition {
    std::vector<BiconnectedComponent> components; // every edge lies in exactly one
    std::vector<int> articulation_points;         // sorted

    bool is_articulation_point(int v) const;
};

BiconnectedDecomposition biconnected_decomposition(const WeightedGraph& g);

// Vertices whose removal disconnects s from t: the cut vertices strictly
// between them on the block-cut tree path. Empty when s and t share a block
// or lie in different components.
std::vector<int> separating_vertices(const WeightedGraph& g, int s, int t);
// Same, against precomputed block vertex sets of a graph on n vertices.
std::vector<int> separating_vertices(int n, const std::vector<std::vector<int>>& blocks, int s,
                                     int t);

} // namespace pmin
