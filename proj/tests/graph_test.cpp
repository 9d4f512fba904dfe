#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "pmin/bicon.hpp"
#include "pmin/cycles.hpp"
#include "pmin/errors.hpp"
#include "pmin/generators.hpp"
#include "pmin/graph.hpp"
#include "pmin/vertex_set.hpp"

#include "util.hpp"

using namespace pmin;
using testutil::make_graph;
using testutil::vs;

namespace {

// A vertex is a cut vertex iff some pair connected with it present becomes
// disconnected without it. Quadratic and oblivious to how the library works.
std::vector<int> brute_articulation_points(const WeightedGraph& g) {
    int n = g.n();
    auto reach = [&](int banned) {
        std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
        for (int s = 0; s < n; ++s) {
            if (s == banned) continue;
            std::vector<int> stack{s};
            ok[s][s] = true;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y = 0; y < n; ++y)
                    if (y != banned && y != x && g.has_edge(x, y) && !ok[s][y]) {
                        ok[s][y] = true;
                        stack.push_back(y);
                    }
            }
        }
        return ok;
    };
    auto base = reach(-1);
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        auto cut = reach(v);
        bool separates = false;
        for (int a = 0; a < n && !separates; ++a)
            for (int b = a + 1; b < n && !separates; ++b)
                if (a != v && b != v && base[a][b] && !cut[a][b]) separates = true;
        if (separates) out.push_back(v);
    }
    return out;
}

// All simple cycles by permutation search; dedupes through canonical_cycle.
std::set<std::vector<int>> brute_cycles(const WeightedGraph& g) {
    int n = g.n();
    std::set<std::vector<int>> out;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (sub >> v & 1) verts.push_back(v);
        if (verts.size() < 3) continue;
        std::vector<int> perm(verts.begin() + 1, verts.end());
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<int> seq{verts[0]};
            seq.insert(seq.end(), perm.begin(), perm.end());
            bool ok = true;
            for (std::size_t i = 0; i + 1 < seq.size() && ok; ++i) ok = g.has_edge(seq[i], seq[i + 1]);
            if (ok && g.has_edge(seq.back(), seq.front())) out.insert(canonical_cycle(seq).verts);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

std::set<std::vector<int>> brute_paths(const WeightedGraph& g) {
    int n = g.n();
    std::set<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(n, false);
    auto emit = [&] {
        std::vector<int> p = cur;
        if (p.front() > p.back()) std::reverse(p.begin(), p.end());
        out.insert(p);
    };
    auto dfs = [&](auto&& self, int v) -> void {
        cur.push_back(v);
        used[v] = true;
        if (cur.size() >= 2) emit();
        for (int u = 0; u < n; ++u)
            if (!used[u] && g.has_edge(v, u)) self(self, u);
        used[v] = false;
        cur.pop_back();
    };
    for (int s = 0; s < n; ++s) dfs(dfs, s);
    return out;
}

} // namespace

TEST_CASE("edges are normalized and validated") {
    WeightedGraph g(4);
    g.add_edge(2, 0, 5); // stored as {0,2}
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(g.weight(0, 2) == 5);
    CHECK(g.edges().size() == 1);
    CHECK(g.edges()[0].u == 0);
    CHECK(g.edges()[0].v == 2);

    CHECK_THROWS_AS(g.add_edge(1, 1, 1), std::invalid_argument);  // loop
    CHECK_THROWS_AS(g.add_edge(0, 2, 7), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(g.add_edge(2, 0, 7), std::invalid_argument);  // duplicate, reversed
    CHECK_THROWS_AS(g.add_edge(0, 1, 0), std::invalid_argument);  // non-positive weight
    CHECK_THROWS_AS(g.add_edge(0, 1, -3), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4, 1), std::invalid_argument);  // out of range

    WeightedGraph h(4);
    h.add_edge(0, 2, 5);
    CHECK(g == h); // insertion order is irrelevant

    g.add_edge(1, 3, 2);
    CHECK(g.degree(1) == 1);
    CHECK(g.neighbors(3) == std::vector<int>{1});
    CHECK(g.incident_edges(0) == std::vector<Edge>{{0, 2, 5}});
}

TEST_CASE("graph text round-trips") {
    const std::string text = "3 3\n1 2 1\n1 3 3\n2 3 2\n";
    WeightedGraph g = parse_graph_text(text);
    CHECK(g.n() == 3);
    CHECK(g.m() == 3);
    CHECK(g.weight(0, 1) == 1);
    CHECK(g.weight(1, 2) == 2);
    CHECK(g.weight(0, 2) == 3);
    CHECK(to_text(g) == text);

    SUBCASE("comments and blank lines are ignored") {
        WeightedGraph h = parse_graph_text("# triangle\n\n3 3  # header\n1 2 1\n1 3 3\n\n2 3 2\n");
        CHECK(h == g);
    }
    SUBCASE("random graphs survive a print-parse cycle") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            WeightedGraph r = random_graph(7, 4, seed, 0.4);
            CHECK(parse_graph_text(to_text(r)) == r);
        }
    }
}

TEST_CASE("parse errors carry 1-based line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph_text(text);
        } catch (const parse_error& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("") == 1);                          // missing header
    CHECK(line_of("x y\n") == 1);                     // malformed header
    CHECK(line_of("3 1 9\n") == 1);                   // trailing token in header
    CHECK(line_of("0 0\n") == 1);                     // no vertices
    CHECK(line_of("3 1\n1 2\n") == 2);                // short edge line
    CHECK(line_of("3 1\n1 4 1\n") == 2);              // vertex out of range
    CHECK(line_of("3 1\n2 1 1\n") == 2);              // u >= v
    CHECK(line_of("3 1\n1 2 0\n") == 2);              // non-positive weight
    CHECK(line_of("3 2\n1 2 1\n1 2 2\n") == 3);       // duplicate edge
    CHECK(line_of("3 2\n1 2 1\n") == 2);              // fewer edges than announced
    CHECK(line_of("3 1\n# c\n1 2 1\n2 3 1\n") == 4);  // more edges than announced
}

TEST_CASE("components and connectivity") {
    WeightedGraph path = make_graph(3, {{0, 1, 1}, {1, 2, 2}});

    CHECK(testutil::blocks_of({VertexSet::full(3), connected_components(path, VertexSet::full(3))}) ==
          std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(testutil::blocks_of({vs(3, {0, 2}), connected_components(path, vs(3, {0, 2}))}) ==
          std::vector<std::vector<int>>{{0}, {2}});

    WeightedGraph two = make_graph(4, {{0, 1, 1}, {2, 3, 1}});
    auto comps = connected_components(two, VertexSet::full(4));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].members() == std::vector<int>{0, 1});
    CHECK(comps[1].members() == std::vector<int>{2, 3});
    CHECK(component_ids(two) == std::vector<int>{0, 0, 1, 1});
    CHECK(!is_connected(two));
    CHECK(is_connected(path));

    CHECK(is_connected(path, VertexSet::full(3)));
    CHECK(!is_connected(path, vs(3, {0, 2})));
    CHECK(is_connected(path, vs(3, {1})));       // singletons are connected
    CHECK(!is_connected(path, VertexSet(3)));    // the empty set is not

    SUBCASE("blocks partition the queried set") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            WeightedGraph g = random_graph(6, 3, seed, 0.3);
            for (std::uint64_t mask = 0; mask < 64; ++mask) {
                VertexSet a = VertexSet::from_mask(6, mask);
                VertexSet seen(6);
                int total = 0;
                for (const VertexSet& b : connected_components(g, a)) {
                    CHECK(!b.empty());
                    CHECK(b.subset_of(a));
                    CHECK(!b.intersects(seen));
                    seen = seen | b;
                    total += b.count();
                }
                CHECK(total == a.count());
            }
        }
    }
}

TEST_CASE("bfs shortest paths are shortest and chordless") {
    WeightedGraph cyc = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
    auto p = bfs_shortest_path(cyc, 0, 2);
    REQUIRE(p.size() == 3); // either way round the square
    CHECK(p.front() == 0);
    CHECK(p.back() == 2);

    CHECK(bfs_shortest_path(cyc, 1, 1) == std::vector<int>{1});

    WeightedGraph two = make_graph(4, {{0, 1, 1}, {2, 3, 1}});
    CHECK(bfs_shortest_path(two, 0, 3).empty());

    SUBCASE("no edge joins non-consecutive path vertices") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            WeightedGraph g = random_graph(8, 2, seed, 0.35);
            for (int s = 0; s < 8; ++s)
                for (int t = 0; t < 8; ++t) {
                    auto q = bfs_shortest_path(g, s, t);
                    for (std::size_t i = 0; i < q.size(); ++i)
                        for (std::size_t j = i + 2; j < q.size(); ++j)
                            if (!(i == 0 && j + 1 == q.size()))
                                CHECK(!g.has_edge(q[i], q[j]));
                }
        }
    }
}

TEST_CASE("complete subgraph test") {
    WeightedGraph tri = make_graph(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    CHECK(is_complete(tri, {0, 1, 2}));
    WeightedGraph path = make_graph(3, {{0, 1, 1}, {1, 2, 2}});
    CHECK(!is_complete(path, {0, 1, 2}));
    CHECK(is_complete(path, {0}));
    CHECK(is_complete(path, {}));
    CHECK(is_complete(path, {0, 1}));
}

TEST_CASE("edge removal helpers") {
    WeightedGraph tri = make_graph(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 2}});
    WeightedGraph no01 = remove_edge(tri, 1, 0);
    CHECK(no01.m() == 2);
    CHECK(!no01.has_edge(0, 1));
    CHECK(no01.weight(1, 2) == 2);

    WeightedGraph no2 = remove_edges_of_weight(tri, 2);
    CHECK(no2.m() == 1);
    CHECK(no2.has_edge(0, 1));
    CHECK(!no2.has_edge(1, 2));
    CHECK(!no2.has_edge(0, 2));
}

TEST_CASE("biconnected decomposition examples") {
    SUBCASE("path") {
        auto d = biconnected_decomposition(make_graph(3, {{0, 1, 1}, {1, 2, 1}}));
        REQUIRE(d.components.size() == 2);
        std::vector<std::vector<int>> comps{d.components[0].vertices, d.components[1].vertices};
        std::sort(comps.begin(), comps.end());
        CHECK(comps == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
        CHECK(d.articulation_points == std::vector<int>{1});
        CHECK(d.is_articulation_point(1));
        CHECK(!d.is_articulation_point(0));
    }
    SUBCASE("triangle") {
        auto d = biconnected_decomposition(make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}));
        REQUIRE(d.components.size() == 1);
        CHECK(d.components[0].vertices == std::vector<int>{0, 1, 2});
        CHECK(d.articulation_points.empty());
    }
    SUBCASE("bowtie") {
        auto d = biconnected_decomposition(make_graph(
            5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, 1}}));
        REQUIRE(d.components.size() == 2);
        CHECK(d.articulation_points == std::vector<int>{2});
    }
}

TEST_CASE("biconnected decomposition invariants on random graphs") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 7); // up to 8 vertices
        WeightedGraph g = random_graph(n, 3, seed * 977, 0.35);
        auto d = biconnected_decomposition(g);

        // Component edge sets partition E.
        std::set<std::pair<int, int>> seen;
        for (const auto& c : d.components)
            for (const Edge& e : c.edges) {
                CHECK(seen.insert({e.u, e.v}).second);
                CHECK(g.has_edge(e.u, e.v));
            }
        CHECK(seen.size() == static_cast<std::size_t>(g.m()));

        CHECK(d.articulation_points == brute_articulation_points(g));

        // A vertex is an articulation point iff it sits in >= 2 components.
        std::vector<int> multi(n, 0);
        for (const auto& c : d.components)
            if (!c.edges.empty())
                for (int v : c.vertices) ++multi[v];
        for (int v = 0; v < n; ++v)
            CHECK(d.is_articulation_point(v) == (multi[v] >= 2));
    }
}

TEST_CASE("separating vertices between two endpoints") {
    SUBCASE("every interior vertex of a path separates its ends") {
        WeightedGraph g = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
        CHECK(separating_vertices(g, 0, 3) == std::vector<int>{1, 2});
        CHECK(separating_vertices(g, 0, 1).empty());
        CHECK(separating_vertices(g, 0, 0).empty());
    }
    SUBCASE("bowtie center separates the two triangles only") {
        WeightedGraph g = make_graph(
            5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, 1}});
        CHECK(separating_vertices(g, 0, 4) == std::vector<int>{2});
        CHECK(separating_vertices(g, 0, 1).empty());
    }
    SUBCASE("an articulation point guarding a pendant subtree separates nothing on the cycle") {
        // 0-2-1-3-0 is a 4-cycle; vertex 2 also carries the pendant vertex 4.
        // Removing 2 still leaves 0 and 1 connected through 3.
        WeightedGraph g = make_graph(5, {{0, 2, 2}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2}, {2, 4, 2}});
        CHECK(biconnected_decomposition(g).is_articulation_point(2));
        CHECK(separating_vertices(g, 0, 1).empty());
    }
    SUBCASE("disconnected endpoints yield nothing") {
        WeightedGraph g = make_graph(4, {{0, 1, 1}, {2, 3, 1}});
        CHECK(separating_vertices(g, 0, 3).empty());
    }
}

TEST_CASE("simple cycle enumeration") {
    WeightedGraph tree = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}});
    CHECK(enumerate_simple_cycles(tree, 100).empty());

    WeightedGraph tri = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    auto one = enumerate_simple_cycles(tri, 100);
    REQUIRE(one.size() == 1);
    CHECK(one[0].verts == std::vector<int>{0, 1, 2});

    WeightedGraph k4 = make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    auto cyc = enumerate_simple_cycles(k4, 100);
    CHECK(cyc.size() == 7); // 4 triangles + 3 four-cycles
    int triangles = 0, squares = 0;
    for (const Cycle& c : cyc) {
        if (c.length() == 3) ++triangles;
        if (c.length() == 4) ++squares;
        // Canonical form: smallest vertex first, then the smaller neighbour.
        CHECK(*std::min_element(c.verts.begin(), c.verts.end()) == c.verts.front());
        CHECK(c.verts[1] < c.verts.back());
    }
    CHECK(triangles == 4);
    CHECK(squares == 3);

    CHECK_THROWS_AS(enumerate_simple_cycles(k4, 6), cap_exceeded);

    SUBCASE("agrees with permutation search") {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            WeightedGraph g = random_graph(6, 2, seed * 31, 0.45);
            std::set<std::vector<int>> got;
            for (const Cycle& c : enumerate_simple_cycles(g, 100000)) CHECK(got.insert(c.verts).second);
            CHECK(got == brute_cycles(g));
        }
    }
}

TEST_CASE("elementary path enumeration") {
    WeightedGraph one = make_graph(2, {{0, 1, 1}});
    CHECK(enumerate_elementary_paths(one, 100).size() == 1);

    WeightedGraph path = make_graph(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(enumerate_elementary_paths(path, 100).size() == 3); // 01, 12, 012

    WeightedGraph tri = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    auto paths = enumerate_elementary_paths(tri, 100);
    CHECK(paths.size() == 6); // three single edges, three two-edge paths

    CHECK_THROWS_AS(enumerate_elementary_paths(tri, 5), cap_exceeded);

    SUBCASE("agrees with exhaustive search and reports each path once") {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            WeightedGraph g = random_graph(5, 2, seed * 77, 0.5);
            std::set<std::vector<int>> got;
            for (const auto& p : enumerate_elementary_paths(g, 100000)) {
                CHECK(p.front() < p.back());
                CHECK(got.insert(p).second);
            }
            CHECK(got == brute_paths(g));
        }
    }
}

TEST_CASE("vertex sets behave like masks") {
    VertexSet a = vs(6, {0, 2, 5});
    CHECK(a.count() == 3);
    CHECK(a.test(2));
    CHECK(!a.test(1));
    CHECK(a.first() == 0);
    CHECK(a.members() == std::vector<int>{0, 2, 5});
    CHECK(a.to_mask() == 0b100101u);
    CHECK(VertexSet::from_mask(6, 0b100101u) == a);

    VertexSet b = vs(6, {2, 3});
    CHECK((a & b).members() == std::vector<int>{2});
    CHECK((a | b).members() == std::vector<int>{0, 2, 3, 5});
    CHECK(a.minus(b).members() == std::vector<int>{0, 5});
    CHECK(b.subset_of(VertexSet::full(6)));
    CHECK(a.intersects(b));
    CHECK(!vs(6, {1}).intersects(a));
    CHECK(VertexSet(6).empty());
    CHECK(VertexSet(6).first() == -1);
    CHECK(VertexSet::full(6).count() == 6);
}
