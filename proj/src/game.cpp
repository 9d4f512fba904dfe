#include "pmin/game.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pmin/errors.hpp"
#include "pmin/partition.hpp"

namespace pmin {

Game::Game(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("player count must be non-negative");
    if (n > kMaxPlayers) throw too_large("game tables support at most " + std::to_string(kMaxPlayers) + " players");
    v_.assign(std::size_t{1} << n, 0);
}

void Game::set_value(Coalition a, long long val) {
    if (a >= v_.size()) throw std::invalid_argument("coalition out of range");
    if (a == 0 && val != 0) throw std::invalid_argument("v(empty) is fixed at 0");
    v_[a] = val;
}

Game unanimity(int n, Coalition s) {
    if (s == 0) throw std::invalid_argument("unanimity: S must be non-empty");
    Game u(n);
    if (s >= (Coalition{1} << n)) throw std::invalid_argument("unanimity: S out of range");
    for (Coalition a = 1; a < (Coalition{1} << n); ++a)
        if ((a & s) == s) u.set_value(a, 1);
    return u;
}

long long delta(const Game& v, Coalition a, Coalition b) {
    return v.value(a | b) + v.value(a & b) - v.value(a) - v.value(b);
}

Game restricted_game(const WeightedGraph& g, const Game& v, Correspondence c) {
    if (g.n() != v.n()) throw std::invalid_argument("restricted_game: graph and game sizes differ");
    Game out(v.n());
    for (Coalition a = 1; a <= v.full(); ++a) {
        VertexSet set = VertexSet::from_mask(g.n(), a);
        Partition p = c == Correspondence::PMin ? p_min(g, set) : p_myerson(g, set);
        long long total = 0;
        for (const VertexSet& b : p.blocks) total += v.value(static_cast<Coalition>(b.to_mask()));
        out.set_value(a, total);
    }
    return out;
}

std::optional<SuperadditivityWitness> superadditivity_violation(const Game& v) {
    Coalition all = v.full();
    for (Coalition a = 1; a <= all; ++a) {
        Coalition rest = all & ~a;
        // Enumerate non-empty subsets of the complement of a.
        for (Coalition b = rest; b != 0; b = (b - 1) & rest) {
            if (v.value(a | b) < v.value(a) + v.value(b)) return SuperadditivityWitness{a, b};
        }
    }
    return std::nullopt;
}

bool is_superadditive(const Game& v) { return !superadditivity_violation(v).has_value(); }

std::optional<ConvexityWitness> convexity_violation(const Game& v) {
    int n = v.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Coalition rest = v.full() & ~(Coalition{1} << i) & ~(Coalition{1} << j);
            Coalition a = rest;
            while (true) {
                long long lhs = v.value(a | (Coalition{1} << i) | (Coalition{1} << j)) + v.value(a);
                long long rhs = v.value(a | (Coalition{1} << i)) + v.value(a | (Coalition{1} << j));
                if (lhs < rhs) return ConvexityWitness{i, j, a};
                if (a == 0) break;
                a = (a - 1) & rest;
            }
        }
    }
    return std::nullopt;
}

bool is_convex(const Game& v) { return !convexity_violation(v).has_value(); }

namespace {

// Connectivity flags for every coalition mask of g (n <= kMaxPlayers).
std::vector<char> connected_mask_table(const WeightedGraph& g) {
    int n = g.n();
    if (n > Game::kMaxPlayers) throw too_large("connectivity table too large");
    std::vector<char> conn(std::size_t{1} << n, 0);
    for (Coalition a = 1; a < (Coalition{1} << n); ++a) {
        if (std::popcount(a) == 1) {
            conn[a] = 1;
            continue;
        }
        // Grow the component of the lowest member inside a.
        Coalition comp = a & (~a + 1);
        bool grew = true;
        while (grew) {
            grew = false;
            Coalition outside = a & ~comp;
            for (Coalition rem = outside; rem != 0; rem &= rem - 1) {
                int y = std::countr_zero(rem);
                Coalition in = comp;
                bool touches = false;
                while (in) {
                    int x = std::countr_zero(in);
                    in &= in - 1;
                    if (g.has_edge(x, y)) {
                        touches = true;
                        break;
                    }
                }
                if (touches) {
                    comp |= Coalition{1} << y;
                    grew = true;
                }
            }
        }
        conn[a] = comp == a;
    }
    return conn;
}

} // namespace

std::optional<FConvexityWitness> f_convexity_violation(const WeightedGraph& g, const Game& v) {
    if (g.n() != v.n()) throw std::invalid_argument("f_convexity_violation: graph and game sizes differ");
    std::vector<char> conn = connected_mask_table(g);
    Coalition all = v.full();
    for (Coalition a = 1; a <= all; ++a) {
        if (!conn[a]) continue;
        for (Coalition b = 1; b <= all; ++b) {
            if (!conn[b]) continue;
            Coalition meet = a & b;
            if (meet == 0 || !conn[meet]) continue;
            if (delta(v, a, b) < 0) return FConvexityWitness{a, b};
        }
    }
    return std::nullopt;
}

bool is_f_convex(const WeightedGraph& g, const Game& v) {
    return !f_convexity_violation(g, v).has_value();
}

bool is_zero_normalized(const Game& v) {
    for (int i = 0; i < v.n(); ++i)
        if (v.value(Coalition{1} << i) != 0) return false;
    return true;
}

Game random_convex_game(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_convex_game: need at least one player");
    std::mt19937_64 rng(seed);
    Game out(n);
    if (n == 1) return out;
    std::uniform_int_distribution<int> coef(1, 5);
    std::uniform_int_distribution<Coalition> pick(0, out.full());
    int terms = 1 + static_cast<int>(rng() % (2 * n));
    for (int t = 0; t < terms; ++t) {
        Coalition s = pick(rng);
        if (std::popcount(s) < 2) {
            --t; // only coalitions of size >= 2 keep the game zero-normalized
            continue;
        }
        long long c = coef(rng);
        for (Coalition a = 1; a <= out.full(); ++a)
            if ((a & s) == s) out.set_value(a, out.value(a) + c);
    }
    return out;
}

Game random_superadditive_game(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_superadditive_game: need at least one player");
    std::mt19937_64 rng(seed);
    Game out(n);
    std::uniform_int_distribution<long long> val(-3, 8);
    for (Coalition a = 1; a <= out.full(); ++a)
        if (std::popcount(a) >= 2) out.set_value(a, val(rng));
    // Superadditive cover: by increasing size, lift each value to the best split.
    for (Coalition a = 1; a <= out.full(); ++a) {
        if (std::popcount(a) < 2) continue;
        Coalition low = a & (~a + 1);
        long long best = out.value(a);
        for (Coalition b = (a - 1) & a; b != 0; b = (b - 1) & a) {
            if (!(b & low) || b == a) continue;
            best = std::max(best, out.value(b) + out.value(a & ~b));
        }
        out.set_value(a, best);
    }
    return out;
}

Game parse_game(std::istream& in, int n) {
    if (n < 1 || n > Game::kMaxPlayers) throw too_large("game files support 1.." + std::to_string(Game::kMaxPlayers) + " players");
    Game out(n);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find('#');
        if (pos != std::string::npos) line = line.substr(0, pos);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string members;
        long long value;
        if (!(ls >> members >> value)) throw parse_error(lineno, "expected 'v1,v2,... value'");
        std::string extra;
        if (ls >> extra) throw parse_error(lineno, "trailing tokens after value");
        Coalition a = 0;
        std::istringstream ms(members);
        std::string tok;
        while (std::getline(ms, tok, ',')) {
            if (tok.empty()) throw parse_error(lineno, "empty vertex in coalition list");
            int v;
            try {
                v = std::stoi(tok);
            } catch (const std::exception&) {
                throw parse_error(lineno, "bad vertex '" + tok + "'");
            }
            if (v < 1 || v > n) throw parse_error(lineno, "vertex out of range");
            Coalition bit = Coalition{1} << (v - 1);
            if (a & bit) throw parse_error(lineno, "repeated vertex in coalition");
            a |= bit;
        }
        if (a == 0) throw parse_error(lineno, "empty coalition is not allowed");
        out.set_value(a, value);
    }
    return out;
}

Game parse_game_text(const std::string& text, int n) {
    std::istringstream in(text);
    return parse_game(in, n);
}

Game load_game_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_game(in, n);
}

} // namespace pmin
