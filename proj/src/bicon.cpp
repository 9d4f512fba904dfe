#include "pmin/bicon.hpp"

#include <algorithm>

namespace pmin {

bool BiconnectedDecomposition::is_articulation_point(int v) const {
    return std::binary_search(articulation_points.begin(), articulation_points.end(), v);
}

namespace {

// Iterative Tarjan DFS over the adjacency matrix; pops the edge stack at
// articulation points to emit one biconnected component per block.
struct Tarjan {
    const WeightedGraph& g;
    std::vector<int> disc, low;
    std::vector<Edge> edge_stack; // weights captured at push; emit never re-reads the matrix
    std::vector<char> is_cut;
    std::vector<BiconnectedComponent> components;
    int timer = 0;

    explicit Tarjan(const WeightedGraph& gr)
        : g(gr), disc(gr.n(), -1), low(gr.n(), 0), is_cut(gr.n(), 0) {}

    void emit_component(int u, int v) {
        if (u > v) std::swap(u, v);
        BiconnectedComponent comp;
        std::vector<char> seen(g.n(), 0);
        while (!edge_stack.empty()) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            comp.edges.push_back(e);
            for (int x : {e.u, e.v}) {
                if (!seen[x]) {
                    seen[x] = 1;
                    comp.vertices.push_back(x);
                }
            }
            if (e.u == u && e.v == v) break;
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        components.push_back(std::move(comp));
    }

    struct Frame {
        int v;
        int parent;
        int next = 0;      // next neighbour candidate to scan
        int children = 0;
    };

    void run(int root) {
        std::vector<Frame> stack;
        stack.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            bool descended = false;
            while (f.next < g.n()) {
                int u = f.next++;
                if (u == v) continue;
                long long w = g.weight(v, u);
                if (w == 0) continue;
                if (disc[u] == -1) {
                    ++f.children;
                    edge_stack.push_back({std::min(v, u), std::max(v, u), w});
                    disc[u] = low[u] = timer++;
                    stack.push_back({u, v});
                    descended = true;
                    break;
                } else if (u != f.parent && disc[u] < disc[v]) {
                    edge_stack.push_back({std::min(v, u), std::max(v, u), w});
                    low[v] = std::min(low[v], disc[u]);
                }
            }
            if (descended) continue;
            stack.pop_back();
            if (!stack.empty()) {
                Frame& p = stack.back();
                low[p.v] = std::min(low[p.v], low[v]);
                if (low[v] >= disc[p.v]) {
                    if (p.parent != -1 || p.children > 1) is_cut[p.v] = 1;
                    emit_component(p.v, v);
                }
            }
        }
    }
};

} // namespace

BiconnectedDecomposition biconnected_decomposition(const WeightedGraph& g) {
    Tarjan t(g);
    for (int v = 0; v < g.n(); ++v)
        if (t.disc[v] == -1) t.run(v);
    BiconnectedDecomposition out;
    out.components = std::move(t.components);
    for (int v = 0; v < g.n(); ++v)
        if (t.is_cut[v]) out.articulation_points.push_back(v);
    return out;
}

std::vector<int> separating_vertices(const WeightedGraph& g, int s, int t) {
    BiconnectedDecomposition d = biconnected_decomposition(g);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(d.components.size());
    for (BiconnectedComponent& c : d.components) blocks.push_back(std::move(c.vertices));
    return separating_vertices(g.n(), blocks, s, t);
}

std::vector<int> separating_vertices(int n, const std::vector<std::vector<int>>& blocks, int s,
                                     int t) {
    if (s == t) return {};
    // Block-cut tree as a bipartite graph: nodes 0..n-1 are vertices,
    // n..n+B-1 are blocks; a vertex neighbours the blocks containing it.
    int nodes = n + static_cast<int>(blocks.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        int bn = n + static_cast<int>(b);
        for (int v : blocks[b]) {
            adj[static_cast<std::size_t>(v)].push_back(bn);
            adj[static_cast<std::size_t>(bn)].push_back(v);
        }
    }
    std::vector<int> parent(static_cast<std::size_t>(nodes), -2);
    std::vector<int> queue{s};
    parent[static_cast<std::size_t>(s)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        if (x == t) break;
        for (int y : adj[static_cast<std::size_t>(x)])
            if (parent[static_cast<std::size_t>(y)] == -2) {
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
    }
    std::vector<int> out;
    if (parent[static_cast<std::size_t>(t)] == -2) return out; // disconnected
    for (int x = parent[static_cast<std::size_t>(t)]; x != s && x != -1;
         x = parent[static_cast<std::size_t>(x)])
        if (x < n) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace pmin
