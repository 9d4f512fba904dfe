#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pmin/graph.hpp"

namespace pmin {

// A coalition encoded as a bit mask over players 0..n-1.
using Coalition = std::uint32_t;

// A TU game given by its full value table, indexed by coalition mask.
// v(empty) is fixed at 0. Values are exact integers.
class Game {
public:
    static constexpr int kMaxPlayers = 20;

    Game() = default;
    explicit Game(int n);

    int n() const { return n_; }
    Coalition full() const { return (Coalition{1} << n_) - 1; }
    long long value(Coalition a) const { return v_[a]; }
    void set_value(Coalition a, long long val);
    const std::vector<long long>& values() const { return v_; }

    bool operator==(const Game& o) const { return n_ == o.n_ && v_ == o.v_; }

private:
    int n_ = 0;
    std::vector<long long> v_;
};

// u_S(A) = 1 iff A contains S; S must be non-empty.
Game unanimity(int n, Coalition s);

// delta(A, B) = v(A|B) + v(A&B) - v(A) - v(B).
long long delta(const Game& v, Coalition a, Coalition b);

enum class Correspondence { PMin, Myerson };

// Restricted game: v̄(A) = sum of v over the blocks of the partition of A.
Game restricted_game(const WeightedGraph& g, const Game& v, Correspondence c);

struct SuperadditivityWitness {
    Coalition a = 0, b = 0; // disjoint, v(a|b) < v(a) + v(b)
};
std::optional<SuperadditivityWitness> superadditivity_violation(const Game& v);
bool is_superadditive(const Game& v);

struct ConvexityWitness {
    int i = 0, j = 0;
    Coalition a = 0; // a avoids i and j; v(a|i|j) + v(a) < v(a|i) + v(a|j)
};
std::optional<ConvexityWitness> convexity_violation(const Game& v);
bool is_convex(const Game& v);

struct FConvexityWitness {
    Coalition a = 0, b = 0; // connected sets with connected non-empty meet, delta < 0
};
// Convexity restricted to the family of connected coalitions of g.
std::optional<FConvexityWitness> f_convexity_violation(const WeightedGraph& g, const Game& v);
bool is_f_convex(const WeightedGraph& g, const Game& v);

bool is_zero_normalized(const Game& v);

// Non-negative integer combination of unanimity games on random coalitions of
// size >= 2: zero-normalized, superadditive and convex. Deterministic per seed.
Game random_convex_game(int n, std::uint64_t seed);

// Superadditive cover of a random zero-normalized integer game: zero-normalized
// and superadditive, generally not convex. Deterministic per seed.
Game random_superadditive_game(int n, std::uint64_t seed);

// Text format: one line per non-zero coalition, "v1,v2,... value" with 1-based
// vertices; omitted coalitions are zero. '#' starts a comment.
Game parse_game(std::istream& in, int n);
Game parse_game_text(const std::string& text, int n);
Game load_game_file(const std::string& path, int n);

} // namespace pmin
