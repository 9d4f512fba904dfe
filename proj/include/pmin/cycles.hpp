#pragma once

#include <cstddef>
#include <vector>

#include "pmin/graph.hpp"

namespace pmin {

// A simple cycle stored canonically: vertices in cyclic order, starting at the
// smallest vertex, oriented so the second vertex is smaller than the last.
struct Cycle {
    std::vector<int> verts;

    int length() const { return static_cast<int>(verts.size()); }
    bool operator==(const Cycle& o) const { return verts == o.verts; }
};

Cycle canonical_cycle(std::vector<int> verts);

// Consecutive cycle edges, in cycle order (last one closes back to the start).
std::vector<Edge> cycle_edges(const WeightedGraph& g, const Cycle& c);
// Graph edges joining two non-consecutive vertices of the cycle.
std::vector<Edge> cycle_chords(const WeightedGraph& g, const Cycle& c);
// Maximum weight over the cycle's edges and chords.
long long max_extended_weight(const WeightedGraph& g, const Cycle& c);
bool cycle_contains_edge(const Cycle& c, int u, int v);

// All simple cycles (length >= 3), each reported once up to rotation and
// reflection. Throws cap_exceeded when more than `cap` cycles exist.
std::vector<Cycle> enumerate_simple_cycles(const WeightedGraph& g, std::size_t cap);

// All elementary (vertex-simple) paths with at least one edge, each reported
// once up to direction reversal, as vertex sequences with front() < back().
// Throws cap_exceeded when more than `cap` paths exist.
std::vector<std::vector<int>> enumerate_elementary_paths(const WeightedGraph& g, std::size_t cap);

} // namespace pmin
