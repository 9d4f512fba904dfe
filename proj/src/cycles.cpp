#include "pmin/cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "pmin/errors.hpp"

namespace pmin {

Cycle canonical_cycle(std::vector<int> verts) {
    if (verts.size() < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    auto smallest = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), smallest, verts.end());
    if (verts[1] > verts.back()) std::reverse(verts.begin() + 1, verts.end());
    return Cycle{std::move(verts)};
}

std::vector<Edge> cycle_edges(const WeightedGraph& g, const Cycle& c) {
    std::vector<Edge> out;
    int m = c.length();
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = c.verts[i], v = c.verts[(i + 1) % m];
        out.push_back({std::min(u, v), std::max(u, v), g.weight(u, v)});
    }
    return out;
}

std::vector<Edge> cycle_chords(const WeightedGraph& g, const Cycle& c) {
    std::vector<Edge> out;
    int m = c.length();
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
            if (consecutive) continue;
            int u = c.verts[i], v = c.verts[j];
            if (g.has_edge(u, v)) out.push_back({std::min(u, v), std::max(u, v), g.weight(u, v)});
        }
    }
    return out;
}

long long max_extended_weight(const WeightedGraph& g, const Cycle& c) {
    long long best = 0;
    for (const Edge& e : cycle_edges(g, c)) best = std::max(best, e.w);
    for (const Edge& e : cycle_chords(g, c)) best = std::max(best, e.w);
    return best;
}

bool cycle_contains_edge(const Cycle& c, int u, int v) {
    int m = c.length();
    for (int i = 0; i < m; ++i) {
        int a = c.verts[i], b = c.verts[(i + 1) % m];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

namespace {

void cycle_dfs(const WeightedGraph& g, int root, std::vector<int>& path, std::vector<char>& on_path,
               std::size_t cap, std::vector<Cycle>& out) {
    int x = path.back();
    for (int y = root + 1; y < g.n(); ++y) {
        if (on_path[y] || !g.has_edge(x, y)) continue;
        path.push_back(y);
        on_path[y] = 1;
        if (path.size() >= 3 && g.has_edge(y, root) && path[1] < y) {
            if (out.size() == cap) throw cap_exceeded("simple-cycle enumeration exceeded cap");
            out.push_back(Cycle{path});
        }
        cycle_dfs(g, root, path, on_path, cap, out);
        on_path[y] = 0;
        path.pop_back();
    }
}

void path_dfs(const WeightedGraph& g, std::vector<int>& path, std::vector<char>& on_path,
              std::size_t cap, std::vector<std::vector<int>>& out) {
    int x = path.back();
    for (int y = 0; y < g.n(); ++y) {
        if (on_path[y] || !g.has_edge(x, y)) continue;
        path.push_back(y);
        on_path[y] = 1;
        if (path.front() < y) {
            if (out.size() == cap) throw cap_exceeded("elementary-path enumeration exceeded cap");
            out.push_back(path);
        }
        path_dfs(g, path, on_path, cap, out);
        on_path[y] = 0;
        path.pop_back();
    }
}

} // namespace

std::vector<Cycle> enumerate_simple_cycles(const WeightedGraph& g, std::size_t cap) {
    std::vector<Cycle> out;
    std::vector<int> path;
    std::vector<char> on_path(g.n(), 0);
    for (int root = 0; root < g.n(); ++root) {
        path.assign(1, root);
        on_path.assign(g.n(), 0);
        on_path[root] = 1;
        cycle_dfs(g, root, path, on_path, cap, out);
    }
    return out;
}

std::vector<std::vector<int>> enumerate_elementary_paths(const WeightedGraph& g, std::size_t cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> on_path(g.n(), 0);
    for (int root = 0; root < g.n(); ++root) {
        path.assign(1, root);
        on_path.assign(g.n(), 0);
        on_path[root] = 1;
        path_dfs(g, path, on_path, cap, out);
    }
    return out;
}

} // namespace pmin
