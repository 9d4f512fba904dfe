#include "pmin/conditions.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "pmin/errors.hpp"
#include "pmin/partition.hpp"

namespace pmin {

namespace {

std::string edge_str(const Edge& e) {
    std::ostringstream s;
    s << '{' << e.u + 1 << ',' << e.v + 1 << "}:" << e.w;
    return s.str();
}

std::string verts_str(const std::vector<int>& vs) {
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < vs.size(); ++i) s << (i ? "," : "") << vs[i] + 1;
    s << ')';
    return s.str();
}

long long min_cycle_weight(const WeightedGraph& g, const Cycle& c) {
    long long best = std::numeric_limits<long long>::max();
    for (const Edge& e : cycle_edges(g, c)) best = std::min(best, e.w);
    return best;
}

bool cycle_is_constant(const WeightedGraph& g, const Cycle& c) {
    std::vector<Edge> es = cycle_edges(g, c);
    for (const Edge& e : es)
        if (e.w != es.front().w) return false;
    return true;
}

// The "two light edges" normal form: exactly two sub-maximum cycle edges,
// equal and sharing a vertex; every other cycle edge sits at the extended max.
struct TwoLightForm {
    bool valid = false;
    int vertex2 = -1;   // shared vertex of the two light edges
    int v1 = -1, v3 = -1; // their far endpoints
    long long light_w = 0;
};

TwoLightForm two_light_form(const WeightedGraph& g, const Cycle& c) {
    long long mhat = max_extended_weight(g, c);
    std::vector<Edge> light;
    for (const Edge& e : cycle_edges(g, c))
        if (e.w < mhat) light.push_back(e);
    TwoLightForm t;
    if (light.size() != 2 || light[0].w != light[1].w) return t;
    int shared = -1;
    for (int p : {light[0].u, light[0].v})
        for (int q : {light[1].u, light[1].v})
            if (p == q) shared = p;
    if (shared == -1) return t;
    t.valid = true;
    t.vertex2 = shared;
    t.v1 = light[0].u == shared ? light[0].v : light[0].u;
    t.v3 = light[1].u == shared ? light[1].v : light[1].u;
    t.light_w = light[0].w;
    return t;
}

bool cycle_constant_at_extended_max(const WeightedGraph& g, const Cycle& c) {
    return cycle_is_constant(g, c) &&
           cycle_edges(g, c).front().w == max_extended_weight(g, c);
}

} // namespace

StarCheck check_star(const WeightedGraph& g) {
    for (int v = 0; v < g.n(); ++v) {
        std::vector<Edge> inc = g.incident_edges(v);
        if (inc.size() < 3) continue;
        long long top = 0;
        for (const Edge& e : inc) top = std::max(top, e.w);
        std::vector<Edge> below;
        for (const Edge& e : inc)
            if (e.w < top) below.push_back(e);
        if (below.size() < 2) continue;
        std::sort(below.begin(), below.end(), [](const Edge& a, const Edge& b) {
            return std::tuple{a.w, a.u, a.v} < std::tuple{b.w, b.u, b.v};
        });
        Edge top_edge{};
        for (const Edge& e : inc) {
            if (e.w == top) {
                top_edge = e;
                break;
            }
        }
        StarCheck out;
        out.status = CheckStatus::Fail;
        out.witness = StarWitness{v, {below[0], below[1], top_edge}};
        out.detail = "vertex " + std::to_string(v + 1) + " carries edges " + edge_str(below[0]) +
                     ", " + edge_str(below[1]) + ", " + edge_str(top_edge) +
                     " whose two largest weights differ";
        return out;
    }
    return {};
}

PathCheck check_path(const WeightedGraph& g, std::size_t cap) {
    std::vector<std::vector<int>> paths = enumerate_elementary_paths(g, cap);
    for (const std::vector<int>& p : paths) {
        int edges = static_cast<int>(p.size()) - 1;
        if (edges < 3) continue;
        long long wf = g.weight(p[0], p[1]);
        long long wl = g.weight(p[edges - 1], p[edges]);
        long long lim = std::max(wf, wl);
        for (int j = 1; j + 1 < edges; ++j) {
            long long wj = g.weight(p[j], p[j + 1]);
            if (wj > lim) {
                PathCheck out;
                out.status = CheckStatus::Fail;
                out.witness = PathWitness{p, 1, j + 1, edges};
                out.detail = "path " + verts_str(p) + ": interior edge weight " +
                             std::to_string(wj) + " exceeds both end weights (" +
                             std::to_string(wf) + ", " + std::to_string(wl) + ")";
                return out;
            }
        }
    }
    return {};
}

namespace {

bool cycle_admissible(const WeightedGraph& g, const Cycle& c) {
    int m = c.length();
    long long mhat = max_extended_weight(g, c);
    std::vector<Edge> chords = cycle_chords(g, c);
    for (int dir = 0; dir < 2; ++dir) {
        for (int rot = 0; rot < m; ++rot) {
            auto label = [&](int t) {
                int idx = dir == 0 ? (rot + t) % m : (rot - t % m + m) % m;
                return c.verts[idx];
            };
            std::vector<long long> w(m);
            for (int t = 0; t < m; ++t) w[t] = g.weight(label(t), label(t + 1));
            bool ok = w[0] <= w[1] && w[1] <= w[2];
            for (int t = 2; ok && t < m; ++t) ok = w[t] == mhat;
            if (!ok) continue;
            int v2 = label(1);
            for (const Edge& ch : chords) {
                bool at_v2 = ch.u == v2 || ch.v == v2;
                if (at_v2 ? ch.w != w[1] : ch.w != mhat) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

} // namespace

CycleCheck check_cycle(const WeightedGraph& g, std::size_t cap) {
    for (const Cycle& c : enumerate_simple_cycles(g, cap)) {
        if (cycle_admissible(g, c)) continue;
        CycleCheck out;
        out.status = CheckStatus::Fail;
        out.witness = CycleWitness{c};
        out.detail = "cycle " + verts_str(c.verts) + " admits no ordering w1 <= w2 <= w3 = ... = max";
        return out;
    }
    return {};
}

bool pan_conclusion_holds(const WeightedGraph& g, const Cycle& c, int x, long long we) {
    if (cycle_constant_at_extended_max(g, c)) return true;
    TwoLightForm t = two_light_form(g, c);
    if (!t.valid || t.vertex2 != x) return false;
    if (we < t.light_w) {
        if (!g.has_edge(t.v1, t.v3)) return false;
        if (g.weight(t.v1, t.v3) != max_extended_weight(g, c)) return false;
    }
    return true;
}

namespace {

// Component of x in g minus (cycle vertices other than x): BFS predecessors,
// or empty when a vertex is unreachable. in_cycle marks V(C).
std::vector<int> side_component_prev(const WeightedGraph& g, const std::vector<char>& in_cycle, int x) {
    std::vector<int> prev(g.n(), -2);
    std::queue<int> q;
    q.push(x);
    prev[x] = -1;
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b = 0; b < g.n(); ++b) {
            if (prev[b] != -2 || !g.has_edge(a, b)) continue;
            if (in_cycle[b] && b != x) continue;
            prev[b] = a;
            q.push(b);
        }
    }
    return prev;
}

std::vector<int> walk_back(const std::vector<int>& prev, int v) {
    std::vector<int> path;
    for (int a = v; a != -1; a = prev[a]) path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

PanCheck check_pan(const WeightedGraph& g, std::size_t cap) {
    std::vector<Cycle> cycles = enumerate_simple_cycles(g, cap);
    std::vector<char> in_cycle(g.n(), 0);
    for (const Cycle& c : cycles) {
        std::fill(in_cycle.begin(), in_cycle.end(), 0);
        for (int v : c.verts) in_cycle[v] = 1;
        long long minc = min_cycle_weight(g, c);
        for (int x : c.verts) {
            std::vector<int> prev = side_component_prev(g, in_cycle, x);
            Edge best{-1, -1, std::numeric_limits<long long>::max()};
            for (const Edge& e : g.edges()) {
                bool inside = prev[e.u] != -2 && prev[e.v] != -2;
                bool touches_cycle_elsewhere = (in_cycle[e.u] && e.u != x) || (in_cycle[e.v] && e.v != x);
                if (!inside || touches_cycle_elsewhere) continue;
                if (std::tuple{e.w, e.u, e.v} < std::tuple{best.w, best.u, best.v}) best = e;
            }
            if (best.u == -1 || best.w > minc) continue;
            if (pan_conclusion_holds(g, c, x, best.w)) continue;
            // Witness path: BFS route from x to the nearer endpoint, then across e.
            auto depth = [&](int v) { return static_cast<int>(walk_back(prev, v).size()); };
            int p = best.u, q = best.v;
            if (depth(q) < depth(p)) std::swap(p, q);
            std::vector<int> path = walk_back(prev, p);
            if (q != p && (path.empty() || path.back() != q)) path.push_back(q);
            PanCheck out;
            out.status = CheckStatus::Fail;
            out.witness = PanWitness{c, path, best};
            out.detail = "cycle " + verts_str(c.verts) + " meets path " + verts_str(path) +
                         " at vertex " + std::to_string(x + 1) + " carrying light edge " +
                         edge_str(best) + " without the required cycle shape";
            return out;
        }
    }
    return {};
}

bool refined_pan_conclusion_holds(const WeightedGraph& g, const Cycle& c, const Edge& e) {
    TwoLightForm t = two_light_form(g, c);
    if (!t.valid) return false;
    if (e.u != t.vertex2 && e.v != t.vertex2) return false;
    std::vector<char> in_cycle(g.n(), 0);
    for (int v : c.verts) in_cycle[v] = 1;
    if (in_cycle[e.u] && in_cycle[e.v] && !cycle_contains_edge(c, e.u, e.v)) return false;
    return is_complete(g, c.verts);
}

PanCheck check_refined_pan(const WeightedGraph& g, std::size_t cap) {
    std::vector<Cycle> cycles = enumerate_simple_cycles(g, cap);
    std::vector<int> comp = component_ids(g);
    for (const Cycle& c : cycles) {
        if (cycle_is_constant(g, c)) continue;
        long long minc = min_cycle_weight(g, c);
        int cid = comp[c.verts[0]];
        for (const Edge& e : g.edges()) {
            if (e.w >= minc || comp[e.u] != cid) continue;
            if (refined_pan_conclusion_holds(g, c, e)) continue;
            // Witness path: shortest route from the cycle to e, then across it.
            std::vector<char> in_cycle(g.n(), 0);
            for (int v : c.verts) in_cycle[v] = 1;
            std::vector<int> path;
            if (in_cycle[e.u] || in_cycle[e.v]) {
                int src = in_cycle[e.u] ? e.u : e.v;
                path = {src, src == e.u ? e.v : e.u};
            } else {
                std::vector<int> prev(g.n(), -2);
                std::queue<int> q;
                for (int v : c.verts) {
                    prev[v] = -1;
                    q.push(v);
                }
                while (!q.empty()) {
                    int a = q.front();
                    q.pop();
                    for (int b = 0; b < g.n(); ++b) {
                        if (prev[b] != -2 || !g.has_edge(a, b)) continue;
                        prev[b] = a;
                        q.push(b);
                    }
                }
                auto depth = [&](int v) { return static_cast<int>(walk_back(prev, v).size()); };
                int p = e.u, q2 = e.v;
                if (depth(q2) < depth(p)) std::swap(p, q2);
                path = walk_back(prev, p);
                path.push_back(q2);
            }
            PanCheck out;
            out.status = CheckStatus::Fail;
            out.witness = PanWitness{c, path, e};
            out.detail = "non-constant cycle " + verts_str(c.verts) + " reachable from edge " +
                         edge_str(e) + " (lighter than the whole cycle) without the required shape";
            return out;
        }
    }
    return {};
}

namespace {

struct CycleData {
    const Cycle* c = nullptr;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> edge_set;
    std::set<std::pair<int, int>> chord_set;
    std::vector<Edge> chords;
    std::vector<Edge> nonmax_chords;
    bool has_max_chord = false;
    long long mhat = 0;
    std::set<int> vset;
};

CycleData cycle_data(const WeightedGraph& g, const Cycle& c) {
    CycleData d;
    d.c = &c;
    d.edges = cycle_edges(g, c);
    for (const Edge& e : d.edges) d.edge_set.insert({e.u, e.v});
    d.chords = cycle_chords(g, c);
    d.mhat = max_extended_weight(g, c);
    for (const Edge& e : d.chords) {
        d.chord_set.insert({e.u, e.v});
        if (e.w == d.mhat)
            d.has_max_chord = true;
        else
            d.nonmax_chords.push_back(e);
    }
    d.vset.insert(c.verts.begin(), c.verts.end());
    return d;
}

bool edges_adjacent(const Edge& a, const Edge& b) {
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

bool triple_adjacent(const Edge& e1, const Edge& e2, const Edge& e3, AdjacencyMode mode) {
    if (mode == AdjacencyMode::SharedVertex) {
        for (int v : {e1.u, e1.v})
            if ((e2.u == v || e2.v == v) && (e3.u == v || e3.v == v)) return true;
        return false;
    }
    return edges_adjacent(e1, e2) && edges_adjacent(e1, e3) && edges_adjacent(e2, e3);
}

// Conclusion of the adjacent-cycles condition for the ordered pair (a, b);
// hypotheses are assumed checked. Returns an explanation on failure.
std::optional<std::string> adjacent_pair_violation(const CycleData& a, const CycleData& b,
                                                   AdjacencyMode mode) {
    std::vector<Edge> common_nonmax;
    for (const Edge& e : a.edges)
        if (b.edge_set.count({e.u, e.v}) && e.w < a.mhat && e.w < b.mhat) common_nonmax.push_back(e);
    if (common_nonmax.size() >= 2)
        return "cycles share two sub-maximum edges " + edge_str(common_nonmax[0]) + " and " +
               edge_str(common_nonmax[1]);
    if (common_nonmax.size() != 1) return std::nullopt;
    const Edge& e1 = common_nonmax.front();
    bool a_triangle = a.edges.size() == 3, b_triangle = b.edges.size() == 3;
    for (const Edge& e2 : a.edges) {
        if (e2.w >= a.mhat || b.edge_set.count({e2.u, e2.v})) continue;
        if (e2.u == e1.u && e2.v == e1.v) continue;
        for (const Edge& e2p : b.edges) {
            if (e2p.w >= b.mhat || a.edge_set.count({e2p.u, e2p.v})) continue;
            if (e2p.u == e1.u && e2p.v == e1.v) continue;
            if (!triple_adjacent(e1, e2, e2p, mode)) continue;
            bool weights_ok;
            if (!a_triangle && !b_triangle)
                weights_ok = e1.w == e2.w && e2.w == e2p.w;
            else
                weights_ok = (e1.w == e2.w && e2.w >= e2p.w) || (e1.w == e2p.w && e2p.w >= e2.w);
            if (weights_ok) return std::nullopt;
        }
    }
    return "unique shared sub-maximum edge " + edge_str(e1) +
           " has no matching sub-maximum companions on both cycles";
}

} // namespace

AdjacentCyclesCheck check_adjacent_cycles(const WeightedGraph& g, std::size_t cap, AdjacencyMode mode) {
    std::vector<Cycle> cycles = enumerate_simple_cycles(g, cap);
    if (cycles.size() * cycles.size() > cap)
        throw cap_exceeded("cycle pair scan exceeds cap of " + std::to_string(cap));
    std::vector<CycleData> data;
    data.reserve(cycles.size());
    for (const Cycle& c : cycles) data.push_back(cycle_data(g, c));
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t j = i + 1; j < data.size(); ++j) {
            const CycleData& a = data[i];
            const CycleData& b = data[j];
            bool share_edge = false;
            for (const auto& e : a.edge_set)
                if (b.edge_set.count(e)) {
                    share_edge = true;
                    break;
                }
            if (!share_edge) continue;
            bool a_extra = !std::includes(b.vset.begin(), b.vset.end(), a.vset.begin(), a.vset.end());
            bool b_extra = !std::includes(a.vset.begin(), a.vset.end(), b.vset.begin(), b.vset.end());
            if (!a_extra || !b_extra) continue;
            if (a.has_max_chord || b.has_max_chord) continue;
            bool common_chord = false;
            for (const auto& e : a.chord_set)
                if (b.chord_set.count(e)) {
                    common_chord = true;
                    break;
                }
            if (common_chord) continue;
            for (int ord = 0; ord < 2; ++ord) {
                const CycleData& first = ord == 0 ? a : b;
                const CycleData& second = ord == 0 ? b : a;
                if (first.nonmax_chords.size() > 1) continue;
                if (auto why = adjacent_pair_violation(first, second, mode)) {
                    AdjacentCyclesCheck out;
                    out.status = CheckStatus::Fail;
                    out.witness = AdjacentCyclesWitness{*first.c, *second.c};
                    out.detail = "cycles " + verts_str(first.c->verts) + " and " +
                                 verts_str(second.c->verts) + ": " + *why;
                    return out;
                }
            }
        }
    }
    return {};
}

ConditionReport check_f_conditions(const WeightedGraph& g, std::size_t cap, AdjacencyMode mode) {
    ConditionReport r;
    r.star = check_star(g);
    try {
        r.path = check_path(g, cap);
    } catch (const cap_exceeded& e) {
        r.path = PathCheck{CheckStatus::Skipped, e.what(), std::nullopt};
    }
    try {
        r.cycle = check_cycle(g, cap);
    } catch (const cap_exceeded& e) {
        r.cycle = CycleCheck{CheckStatus::Skipped, e.what(), std::nullopt};
    }
    try {
        r.pan = check_pan(g, cap);
    } catch (const cap_exceeded& e) {
        r.pan = PanCheck{CheckStatus::Skipped, e.what(), std::nullopt};
    }
    try {
        r.adjacent_cycles = check_adjacent_cycles(g, cap, mode);
    } catch (const cap_exceeded& e) {
        r.adjacent_cycles = AdjacentCyclesCheck{CheckStatus::Skipped, e.what(), std::nullopt};
    }
    return r;
}

namespace {

ClaimResult skipped_claim(int id, const std::string& why) {
    return ClaimResult{id, CheckStatus::Skipped, why, std::nullopt};
}

ClaimResult pass_claim(int id) { return ClaimResult{id, CheckStatus::Pass, "", std::nullopt}; }

ClaimResult fail_claim(int id, const std::string& why, const Cycle& c) {
    return ClaimResult{id, CheckStatus::Fail, why, c};
}

} // namespace

ConstantCycleClaims check_constant_cycle_claims(const WeightedGraph& g, std::size_t cap) {
    ConstantCycleClaims out;
    WeightSpectrum ws = weight_spectrum(g);
    int k = ws.k();
    if (k < 2) {
        for (int id = 1; id <= 5; ++id) out.claims.push_back(skipped_claim(id, "fewer than two distinct weights"));
        return out;
    }
    if (k > 3) {
        for (int id = 1; id <= 5; ++id) out.claims.push_back(skipped_claim(id, "more than three distinct weights"));
        return out;
    }
    std::vector<Cycle> cycles;
    try {
        cycles = enumerate_simple_cycles(g, cap);
    } catch (const cap_exceeded& e) {
        for (int id = 1; id <= 5; ++id) out.claims.push_back(skipped_claim(id, e.what()));
        return out;
    }
    long long s1 = ws.weights[0], s2 = ws.weights[1];
    int n1 = ws.counts[0];
    std::vector<const Cycle*> const_s2, const_any; // constant cycles at s2 / at s2 or s3
    for (const Cycle& c : cycles) {
        if (!cycle_is_constant(g, c)) continue;
        long long w = cycle_edges(g, c).front().w;
        if (w == s2) const_s2.push_back(&c);
        if (w > s1) const_any.push_back(&c);
    }

    if (n1 >= 2) {
        ClaimResult r = pass_claim(1);
        if (k >= 3) {
            r = ClaimResult{1, CheckStatus::Fail,
                            "three distinct weights despite multiple minimum-weight edges", std::nullopt};
        }
        for (const Cycle* c : const_s2) {
            if (r.status == CheckStatus::Fail) break;
            if (!is_complete(g, c->verts)) {
                r = fail_claim(1, "constant cycle " + verts_str(c->verts) + " at the second weight is incomplete", *c);
                break;
            }
        }
        out.claims.push_back(r);
        for (int id = 2; id <= 5; ++id) out.claims.push_back(skipped_claim(id, "more than one minimum-weight edge"));
        return out;
    }

    out.claims.push_back(skipped_claim(1, "single minimum-weight edge"));
    Edge e1{};
    for (const Edge& e : g.edges())
        if (e.w == s1) e1 = e;
    int a = e1.u, b = e1.v;

    // Claim 2: a constant cycle at the second weight forces a two-weight graph,
    // and must be complete when it neither touches e1 nor is joined to it.
    {
        ClaimResult r = pass_claim(2);
        for (const Cycle* c : const_s2) {
            if (k >= 3) {
                r = fail_claim(2, "three distinct weights alongside constant cycle " + verts_str(c->verts), *c);
                break;
            }
            bool touches = false, linked = false;
            for (int v : c->verts) {
                if (v == a || v == b) touches = true;
                if (g.has_edge(v, a) || g.has_edge(v, b)) linked = true;
            }
            if (!touches && !linked && !is_complete(g, c->verts)) {
                r = fail_claim(2, "detached constant cycle " + verts_str(c->verts) + " is incomplete", *c);
                break;
            }
        }
        out.claims.push_back(r);
    }

    // Claim 3: a constant cycle through an end-vertex of e1 must have every
    // vertex joined to that end-vertex.
    {
        ClaimResult r = pass_claim(3);
        for (const Cycle* c : const_any) {
            for (int x : {a, b}) {
                if (std::find(c->verts.begin(), c->verts.end(), x) == c->verts.end()) continue;
                for (int v : c->verts) {
                    if (v != x && !g.has_edge(x, v)) {
                        r = fail_claim(3, "constant cycle " + verts_str(c->verts) + " through vertex " +
                                              std::to_string(x + 1) + " misses edge to " + std::to_string(v + 1),
                                       *c);
                        break;
                    }
                }
                if (r.status == CheckStatus::Fail) break;
            }
            if (r.status == CheckStatus::Fail) break;
        }
        out.claims.push_back(r);
    }

    // Claim 4: a constant cycle away from e1 but joined to an end-vertex x by a
    // second-weight edge {x,kv} must have all vertices joined to one end-vertex,
    // or kv is x's only link into the cycle and the cycle is complete.
    {
        ClaimResult r = pass_claim(4);
        for (const Cycle* c : const_any) {
            bool touches = false;
            for (int v : c->verts)
                if (v == a || v == b) touches = true;
            if (touches) continue;
            for (int x : {a, b}) {
                int other = x == a ? b : a;
                for (int kv : c->verts) {
                    if (g.weight(x, kv) != s2) continue;
                    bool all_other = true, all_x = true;
                    for (int v : c->verts) {
                        if (!g.has_edge(other, v)) all_other = false;
                        if (!g.has_edge(x, v)) all_x = false;
                    }
                    bool unique_link = true;
                    for (int v : c->verts)
                        if (v != kv && g.has_edge(x, v)) unique_link = false;
                    bool lone_complete = unique_link && is_complete(g, c->verts);
                    if (!all_other && !all_x && !lone_complete) {
                        r = fail_claim(4, "constant cycle " + verts_str(c->verts) + " joined to vertex " +
                                              std::to_string(x + 1) + " via " + std::to_string(kv + 1) +
                                              " satisfies none of the linkage shapes",
                                       *c);
                        break;
                    }
                }
                if (r.status == CheckStatus::Fail) break;
            }
            if (r.status == CheckStatus::Fail) break;
        }
        out.claims.push_back(r);
    }

    // Claim 5: with three weights and all second-weight edges at one end-vertex
    // of e1, every cycle avoiding e1 is complete and does not see e1 as a chord.
    {
        if (k != 3) {
            out.claims.push_back(skipped_claim(5, "fewer than three distinct weights"));
        } else {
            bool all_at_a = true, all_at_b = true;
            for (const Edge& e : g.edges()) {
                if (e.w != s2) continue;
                if (e.u != a && e.v != a) all_at_a = false;
                if (e.u != b && e.v != b) all_at_b = false;
            }
            if (!all_at_a && !all_at_b) {
                out.claims.push_back(skipped_claim(5, "second-weight edges do not share an end-vertex of the minimum edge"));
            } else {
                ClaimResult r = pass_claim(5);
                for (const Cycle& c : cycles) {
                    if (cycle_contains_edge(c, a, b)) continue;
                    bool a_in = std::find(c.verts.begin(), c.verts.end(), a) != c.verts.end();
                    bool b_in = std::find(c.verts.begin(), c.verts.end(), b) != c.verts.end();
                    if (a_in && b_in) {
                        r = fail_claim(5, "minimum edge is a chord of cycle " + verts_str(c.verts), c);
                        break;
                    }
                    if (!is_complete(g, c.verts)) {
                        r = fail_claim(5, "cycle " + verts_str(c.verts) + " avoiding the minimum edge is incomplete", c);
                        break;
                    }
                }
                out.claims.push_back(r);
            }
        }
    }
    return out;
}

} // namespace pmin
