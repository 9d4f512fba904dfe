#include "pmin/oracle.hpp"

#include <bit>
#include <limits>
#include <random>

#include "pmin/errors.hpp"

namespace pmin {

namespace {

void check_cap(const WeightedGraph& g, int cap) {
    if (g.n() > cap)
        throw too_large("graph has " + std::to_string(g.n()) + " vertices, cap is " +
                        std::to_string(cap));
}

} // namespace

BlockTable::BlockTable(const WeightedGraph& g, Correspondence c) : n_(g.n()) {
    if (n_ > Game::kMaxPlayers) throw too_large("block table supports at most 20 vertices");
    shift_ = std::bit_width(static_cast<unsigned>(n_ > 1 ? n_ - 1 : 1));
    t_.assign(std::size_t{1} << (n_ + shift_), 0);
    std::vector<int> parent(n_);
    const std::vector<Edge>& es = g.edges();
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Coalition a = 1; a < (Coalition{1} << n_); ++a) {
        long long minw = std::numeric_limits<long long>::max();
        if (c == Correspondence::PMin) {
            for (const Edge& e : es)
                if ((a >> e.u & 1) && (a >> e.v & 1)) minw = std::min(minw, e.w);
        }
        for (Coalition rem = a; rem; rem &= rem - 1) {
            int v = std::countr_zero(rem);
            parent[v] = v;
        }
        for (const Edge& e : es) {
            if (!(a >> e.u & 1) || !(a >> e.v & 1) || e.w == minw) continue;
            parent[find(e.u)] = find(e.v);
        }
        std::size_t base = static_cast<std::size_t>(a) << shift_;
        for (Coalition rem = a; rem; rem &= rem - 1) {
            int v = std::countr_zero(rem);
            t_[base + static_cast<std::size_t>(find(v))] |= Coalition{1} << v;
        }
        for (Coalition rem = a; rem; rem &= rem - 1) {
            int v = std::countr_zero(rem);
            int r = find(v);
            if (r != v) t_[base + static_cast<std::size_t>(v)] = t_[base + static_cast<std::size_t>(r)];
        }
    }
}

namespace {

// Convexity of the restricted unanimity game of s via marginal contributions;
// fills the witness and returns false on the first violation.
bool unanimity_convex(const BlockTable& bt, Coalition s, ConvexityInheritance& out) {
    int n = bt.n();
    Coalition full = (Coalition{1} << n) - 1;
    auto u = [&](Coalition x) -> int { return bt.in_one_block(x, s) ? 1 : 0; };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Coalition bi = Coalition{1} << i, bj = Coalition{1} << j;
            Coalition rest = full & ~bi & ~bj;
            Coalition a = 0;
            while (true) {
                if (u(a | bi | bj) + u(a) < u(a | bi) + u(a | bj)) {
                    out.inherits = false;
                    out.s = s;
                    out.i = i;
                    out.a = a;
                    out.b = a | bj;
                    return false;
                }
                if (a == rest) break;
                a = (a - rest) & rest;
            }
        }
    }
    return true;
}

// All coalitions ordered by size then mask value.
std::vector<Coalition> coalitions_by_size(int n) {
    std::vector<Coalition> order;
    order.reserve((std::size_t{1} << n) - 1);
    for (int size = 1; size <= n; ++size)
        for (Coalition s = 1; s < (Coalition{1} << n); ++s)
            if (std::popcount(s) == size) order.push_back(s);
    return order;
}

} // namespace

ConvexityInheritance inheritance_convexity_bruteforce(const WeightedGraph& g, int cap) {
    check_cap(g, cap);
    ConvexityInheritance out;
    if (g.n() == 0) return out;
    BlockTable bt(g, Correspondence::PMin);
    for (Coalition s : coalitions_by_size(g.n()))
        if (!unanimity_convex(bt, s, out)) return out;
    return out;
}

ConvexityInheritance inheritance_convexity_sampled(const WeightedGraph& g, int samples,
                                                   std::uint64_t seed) {
    ConvexityInheritance out;
    if (g.n() < 2 || samples <= 0) return out;
    BlockTable bt(g, Correspondence::PMin);
    std::mt19937_64 rng(seed);
    Coalition full = (Coalition{1} << g.n()) - 1;
    for (int t = 0; t < samples; ++t) {
        Coalition s = 0;
        while (s == 0) s = static_cast<Coalition>(rng()) & full;
        if (!unanimity_convex(bt, s, out)) return out;
    }
    return out;
}

namespace {

std::vector<Coalition> connected_coalitions(const WeightedGraph& g) {
    std::vector<Coalition> out;
    int n = g.n();
    std::vector<char> conn(std::size_t{1} << n, 0);
    for (Coalition a = 1; a < (Coalition{1} << n); ++a) {
        Coalition comp = a & (~a + 1);
        bool grew = true;
        while (grew) {
            grew = false;
            for (Coalition rem = a & ~comp; rem; rem &= rem - 1) {
                int y = std::countr_zero(rem);
                for (Coalition in = comp; in; in &= in - 1) {
                    if (g.has_edge(std::countr_zero(in), y)) {
                        comp |= Coalition{1} << y;
                        grew = true;
                        break;
                    }
                }
            }
        }
        conn[a] = comp == a;
        if (conn[a]) out.push_back(a);
    }
    return out;
}

} // namespace

FConvexityInheritance inheritance_fconvexity_bruteforce(const WeightedGraph& g, int cap) {
    check_cap(g, cap);
    FConvexityInheritance out;
    if (g.n() == 0) return out;
    BlockTable bt(g, Correspondence::PMin);
    std::vector<Coalition> conn = connected_coalitions(g);
    std::vector<char> is_conn(std::size_t{1} << g.n(), 0);
    for (Coalition a : conn) is_conn[a] = 1;
    for (Coalition s : coalitions_by_size(g.n())) {
        auto u = [&](Coalition x) -> int { return bt.in_one_block(x, s) ? 1 : 0; };
        for (Coalition a : conn) {
            for (Coalition b : conn) {
                Coalition meet = a & b;
                if (meet == 0 || !is_conn[meet]) continue;
                if (u(a | b) + u(meet) < u(a) + u(b)) {
                    out.inherits = false;
                    out.s = s;
                    out.a = a;
                    out.b = b;
                    return out;
                }
            }
        }
    }
    return out;
}

StabilityResult partition_stability_check(const WeightedGraph& g, SetFamily family, int cap) {
    check_cap(g, cap);
    StabilityResult out;
    int n = g.n();
    if (n == 0) return out;
    BlockTable bt(g, Correspondence::PMin);
    std::vector<char> member(std::size_t{1} << n, 1);
    if (family == SetFamily::Connected) {
        std::fill(member.begin(), member.end(), 0);
        for (Coalition a : connected_coalitions(g)) member[a] = 1;
    }
    member[0] = 0;
    Coalition full = (Coalition{1} << n) - 1;
    for (int i = 0; i < n; ++i) {
        Coalition bi = Coalition{1} << i;
        Coalition ground = full & ~bi;
        for (Coalition b = ground;; b = (b - 1) & ground) {
            if (b == 0) break;
            if (member[b]) {
                for (Coalition a = b;; a = (a - 1) & b) {
                    if (a == 0) break;
                    if (member[a] && member[a | bi]) {
                        // Blocks of the partition of A∪{i} restricted to A.
                        Coalition seen = 0;
                        for (Coalition rem = a; rem; rem &= rem - 1) {
                            int v = std::countr_zero(rem);
                            if (seen >> v & 1) continue;
                            Coalition ap = bt.block_mask(a | bi, v) & a;
                            seen |= ap;
                            for (Coalition r2 = ap; r2; r2 &= r2 - 1) {
                                int x = std::countr_zero(r2);
                                if ((bt.block_mask(a, x) & ap) != (bt.block_mask(b, x) & ap)) {
                                    out.stable = false;
                                    out.i = i;
                                    out.a = a;
                                    out.b = b;
                                    out.a_prime = ap;
                                    return out;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

RefinementResult refinement_check(const WeightedGraph& g, int cap) {
    check_cap(g, cap);
    RefinementResult out;
    int n = g.n();
    if (n == 0) return out;
    BlockTable bt(g, Correspondence::PMin);
    Coalition full = (Coalition{1} << n) - 1;
    for (Coalition b = full; b; b = (b - 1) & full) {
        for (Coalition a = b;; a = (a - 1) & b) {
            if (a == 0) break;
            for (Coalition rem = a; rem; rem &= rem - 1) {
                int v = std::countr_zero(rem);
                if (bt.block_mask(a, v) & ~bt.block_mask(b, v)) {
                    out.pass = false;
                    out.a = a;
                    out.b = b;
                    return out;
                }
            }
        }
    }
    return out;
}

} // namespace pmin
