#include "pmin/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "pmin/errors.hpp"

namespace pmin {

WeightedGraph::WeightedGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void WeightedGraph::add_edge(int u, int v, long long w) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (w <= 0) throw std::invalid_argument("edge weights must be positive");
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v, w});
    adj_[static_cast<std::size_t>(u) * n_ + v] = w;
    adj_[static_cast<std::size_t>(v) * n_ + u] = w;
}

std::vector<int> WeightedGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(v, u)) out.push_back(u);
    return out;
}

int WeightedGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(v, u)) ++d;
    return d;
}

bool WeightedGraph::operator==(const WeightedGraph& o) const {
    if (n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
    return adj_ == o.adj_;
}

std::vector<Edge> WeightedGraph::incident_edges(int v) const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(v, u)) out.push_back({std::min(u, v), std::max(u, v), weight(u, v)});
    return out;
}

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

} // namespace

WeightedGraph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1;
    WeightedGraph g;
    long long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream ls(body);
        if (n < 0) {
            if (!(ls >> n >> m)) throw parse_error(lineno, "expected header 'n m'");
            std::string extra;
            if (ls >> extra) throw parse_error(lineno, "trailing tokens after header");
            if (n < 1) throw parse_error(lineno, "vertex count must be at least 1");
            if (m < 0) throw parse_error(lineno, "edge count must be non-negative");
            g = WeightedGraph(n);
            continue;
        }
        long long u, v, w;
        if (!(ls >> u >> v >> w)) throw parse_error(lineno, "expected edge 'u v w'");
        std::string extra;
        if (ls >> extra) throw parse_error(lineno, "trailing tokens after edge");
        if (u < 1 || u > n || v < 1 || v > n) throw parse_error(lineno, "vertex out of range");
        if (u >= v) throw parse_error(lineno, "edges must satisfy u < v");
        if (w <= 0) throw parse_error(lineno, "edge weights must be positive");
        if (g.has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)))
            throw parse_error(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1), w);
        ++seen;
    }
    if (n < 0) throw parse_error(lineno ? lineno : 1, "missing header 'n m'");
    if (seen != m)
        throw parse_error(lineno ? lineno : 1, "header announced " + std::to_string(m) +
                                                   " edges but " + std::to_string(seen) + " were given");
    return g;
}

WeightedGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string to_text(const WeightedGraph& g) {
    std::vector<Edge> es = g.edges();
    std::sort(es.begin(), es.end(),
              [](const Edge& a, const Edge& b) { return std::pair{a.u, a.v} < std::pair{b.u, b.v}; });
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : es) out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
    return out.str();
}

WeightedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

std::vector<VertexSet> connected_components(const WeightedGraph& g, const VertexSet& a) {
    std::vector<VertexSet> blocks;
    std::vector<int> verts = a.members();
    std::vector<char> visited(g.n(), 0);
    for (int s : verts) {
        if (visited[s]) continue;
        VertexSet block(g.n());
        std::queue<int> q;
        q.push(s);
        visited[s] = 1;
        block.set(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : verts) {
                if (!visited[y] && g.has_edge(x, y)) {
                    visited[y] = 1;
                    block.set(y);
                    q.push(y);
                }
            }
        }
        blocks.push_back(block);
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const VertexSet& x, const VertexSet& y) { return x.first() < y.first(); });
    return blocks;
}

std::vector<int> component_ids(const WeightedGraph& g) {
    std::vector<int> id(g.n(), -1);
    int next = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (id[s] != -1) continue;
        std::queue<int> q;
        q.push(s);
        id[s] = next;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y = 0; y < g.n(); ++y) {
                if (id[y] == -1 && g.has_edge(x, y)) {
                    id[y] = next;
                    q.push(y);
                }
            }
        }
        ++next;
    }
    return id;
}

bool is_connected(const WeightedGraph& g) {
    if (g.n() <= 1) return true;
    std::vector<int> id = component_ids(g);
    for (int v = 1; v < g.n(); ++v)
        if (id[v] != id[0]) return false;
    return true;
}

bool is_connected(const WeightedGraph& g, const VertexSet& a) {
    if (a.empty()) return false;
    return connected_components(g, a).size() == 1;
}

std::vector<int> bfs_shortest_path(const WeightedGraph& g, int s, int t) {
    std::vector<int> prev(g.n(), -2);
    std::queue<int> q;
    q.push(s);
    prev[s] = -1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == t) break;
        for (int y = 0; y < g.n(); ++y) {
            if (prev[y] == -2 && g.has_edge(x, y)) {
                prev[y] = x;
                q.push(y);
            }
        }
    }
    if (prev[t] == -2) return {};
    std::vector<int> path;
    for (int x = t; x != -1; x = prev[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_complete(const WeightedGraph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

WeightedGraph remove_edge(const WeightedGraph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    WeightedGraph h = g;
    auto it = std::find_if(h.edges_.begin(), h.edges_.end(),
                           [&](const Edge& e) { return e.u == u && e.v == v; });
    if (it == h.edges_.end()) return h;
    h.edges_.erase(it);
    h.adj_[static_cast<std::size_t>(u) * h.n_ + v] = 0;
    h.adj_[static_cast<std::size_t>(v) * h.n_ + u] = 0;
    return h;
}

WeightedGraph remove_edges_of_weight(const WeightedGraph& g, long long w) {
    WeightedGraph h(g.n());
    for (const Edge& e : g.edges())
        if (e.w != w) h.add_edge(e.u, e.v, e.w);
    return h;
}

} // namespace pmin
