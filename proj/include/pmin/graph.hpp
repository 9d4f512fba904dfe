#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pmin/vertex_set.hpp"

namespace pmin {

struct Edge {
    int u = 0, v = 0; // endpoints, u < v
    long long w = 0;  // positive weight

    bool operator==(const Edge& o) const { return u == o.u && v == o.v && w == o.w; }
};

// Undirected edge-weighted graph on vertices 0..n-1, at most one edge per pair,
// stored both as a sorted edge list and as an adjacency matrix (0 = no edge).
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    long long weight(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
    bool has_edge(int u, int v) const { return weight(u, v) != 0; }
    // Rejects loops, duplicate pairs and non-positive weights.
    void add_edge(int u, int v, long long w);

    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    std::vector<Edge> incident_edges(int v) const;

    // Equality ignores edge insertion order.
    bool operator==(const WeightedGraph& o) const;

private:
    friend WeightedGraph remove_edge(const WeightedGraph& g, int u, int v);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<long long> adj_;
};

// Text format: first non-comment line "n m", then m lines "u v w" with
// 1-based vertices, u < v and positive integer weights. '#' starts a comment.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph_text(const std::string& text);
std::string to_text(const WeightedGraph& g);
WeightedGraph load_graph_file(const std::string& path);

// Connected components of the subgraph induced by `a`, sorted by smallest member.
std::vector<VertexSet> connected_components(const WeightedGraph& g, const VertexSet& a);
// Component id per vertex for the whole graph.
std::vector<int> component_ids(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);
// False for the empty set.
bool is_connected(const WeightedGraph& g, const VertexSet& a);

// Vertices of a shortest s-t path in order, or empty when t is unreachable.
std::vector<int> bfs_shortest_path(const WeightedGraph& g, int s, int t);

bool is_complete(const WeightedGraph& g, const std::vector<int>& verts);

WeightedGraph remove_edge(const WeightedGraph& g, int u, int v);
WeightedGraph remove_edges_of_weight(const WeightedGraph& g, long long w);

} // namespace pmin
