#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <stdexcept>
#include <vector>

#include "pmin/errors.hpp"
#include "pmin/game.hpp"
#include "pmin/generators.hpp"
#include "pmin/graph.hpp"
#include "pmin/partition.hpp"

#include "util.hpp"

using namespace pmin;
using testutil::make_graph;

namespace {

Coalition bit(int v) { return Coalition{1} << v; }

} // namespace

TEST_CASE("game tables") {
    Game g(3);
    CHECK(g.full() == 0b111u);
    CHECK(g.value(0b101u) == 0);
    g.set_value(0b101u, 4);
    CHECK(g.value(0b101u) == 4);
    CHECK_THROWS_AS(g.set_value(0, 1), std::invalid_argument); // v(empty) is pinned at 0
    CHECK_NOTHROW(g.set_value(0, 0));
    CHECK_THROWS_AS(g.set_value(0b1000u, 1), std::invalid_argument);
    CHECK_THROWS_AS(Game(Game::kMaxPlayers + 1), too_large);
}

TEST_CASE("unanimity games") {
    Game u = unanimity(3, 0b011u);
    CHECK(u.value(0b011u) == 1);
    CHECK(u.value(0b101u) == 0);
    CHECK(u.value(0b111u) == 1);
    CHECK(u.value(0b001u) == 0);

    Game un = unanimity(3, 0b111u);
    for (Coalition a = 1; a < 0b111u; ++a) CHECK(un.value(a) == 0);
    CHECK(un.value(0b111u) == 1);

    Game u0 = unanimity(3, 0b001u);
    for (Coalition a = 0; a <= 0b111u; ++a) CHECK(u0.value(a) == ((a & 1) != 0 ? 1 : 0));

    CHECK_THROWS_AS(unanimity(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(unanimity(3, 0b1000u), std::invalid_argument);
}

TEST_CASE("delta") {
    Game u = unanimity(2, 0b11u);
    CHECK(delta(u, 0b01u, 0b10u) == 1); // 1 + 0 - 0 - 0
    CHECK(delta(u, 0b01u, 0b01u) == 0);

    Game additive(3); // v(A) = sum of fixed per-player worths
    const long long worth[3] = {2, 5, 9};
    for (Coalition a = 1; a <= additive.full(); ++a) {
        long long s = 0;
        for (int i = 0; i < 3; ++i)
            if (a & bit(i)) s += worth[i];
        additive.set_value(a, s);
    }
    for (Coalition a = 0; a <= additive.full(); ++a)
        for (Coalition b = 0; b <= additive.full(); ++b) CHECK(delta(additive, a, b) == 0);
}

TEST_CASE("restricted games") {
    WeightedGraph path = make_graph(3, {{0, 1, 1}, {1, 2, 2}});

    SUBCASE("a unanimity game survives only where its carrier shares a block") {
        // P_min({2,3}) = {{2},{3}}, so only the full coalition keeps {2,3} together.
        Game bar = restricted_game(path, unanimity(3, 0b110u), Correspondence::PMin);
        for (Coalition a = 0; a <= bar.full(); ++a) CHECK(bar.value(a) == (a == 0b111u ? 1 : 0));
    }
    SUBCASE("constant weights plus zero-normalization flatten everything") {
        WeightedGraph constant = make_graph(4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {0, 3, 3}});
        Game v = random_convex_game(4, 42);
        Game bar = restricted_game(constant, v, Correspondence::PMin);
        for (Coalition a = 0; a <= bar.full(); ++a) CHECK(bar.value(a) == 0);
    }
    SUBCASE("the component correspondence is the identity on connected coalitions") {
        Game v = random_convex_game(3, 7);
        Game bar = restricted_game(path, v, Correspondence::Myerson);
        CHECK(bar.value(0b111u) == v.value(0b111u));
        CHECK(bar.value(0b011u) == v.value(0b011u));
        CHECK(bar.value(0b110u) == v.value(0b110u));
        CHECK(bar.value(0b101u) == v.value(0b001u) + v.value(0b100u)); // {1,3} splits

        Game un = restricted_game(path, unanimity(3, 0b111u), Correspondence::Myerson);
        CHECK(un == unanimity(3, 0b111u));
    }
    SUBCASE("sizes must match") {
        CHECK_THROWS_AS(restricted_game(path, Game(4), Correspondence::PMin), std::invalid_argument);
    }
}

TEST_CASE("superadditivity certification") {
    CHECK(is_superadditive(unanimity(4, 0b0110u)));
    CHECK(is_superadditive(Game(3)));

    Game bad(2);
    bad.set_value(0b11u, -1);
    auto w = superadditivity_violation(bad);
    REQUIRE(w.has_value());
    CHECK((w->a & w->b) == 0);
    CHECK(bad.value(w->a | w->b) < bad.value(w->a) + bad.value(w->b));
}

TEST_CASE("convexity certification") {
    CHECK(is_convex(unanimity(4, 0b1010u)));

    SUBCASE("a capped cardinality game is not convex") {
        Game v(2); // v(A) = min(|A|, 1)
        v.set_value(0b01u, 1);
        v.set_value(0b10u, 1);
        v.set_value(0b11u, 1);
        auto w = convexity_violation(v);
        REQUIRE(w.has_value());
        Coalition ai = w->a | bit(w->i), aj = w->a | bit(w->j);
        CHECK(v.value(ai | aj) + v.value(w->a) < v.value(ai) + v.value(aj));
        CHECK(delta(v, ai, aj) == -1);
    }
    SUBCASE("squared cardinality is convex") {
        Game v(4);
        for (Coalition a = 1; a <= v.full(); ++a) {
            long long c = std::popcount(a);
            v.set_value(a, c * c);
        }
        CHECK(is_convex(v));
    }
    SUBCASE("the pairwise sweep matches the definitional check") {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            int n = 2 + static_cast<int>(seed % 3);
            Game v(n);
            std::uint64_t s = seed;
            for (Coalition a = 1; a <= v.full(); ++a) {
                s = testutil::splitmix64(s);
                v.set_value(a, static_cast<long long>(s % 7) - 3);
            }
            CHECK(is_convex(v) == testutil::convex_by_definition(v));
            if (auto w = convexity_violation(v)) {
                Coalition ai = w->a | bit(w->i), aj = w->a | bit(w->j);
                CHECK(delta(v, ai, aj) < 0);
            }
        }
    }
}

TEST_CASE("convexity restricted to connected coalitions") {
    WeightedGraph path = make_graph(3, {{0, 1, 1}, {1, 2, 2}});

    SUBCASE("convex games always pass") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed)
            CHECK(is_f_convex(path, random_convex_game(3, seed)));
    }
    SUBCASE("a dent on a disconnected coalition is invisible") {
        Game v(3);
        v.set_value(0b101u, -5); // {1,3} is not connected in the path
        CHECK(!is_convex(v));
        CHECK(is_f_convex(path, v));
    }
    SUBCASE("a violation witness is a genuine connected pair") {
        WeightedGraph star = make_graph(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}});
        Game bar = restricted_game(star, unanimity(4, 0b1001u), Correspondence::PMin);
        auto w = f_convexity_violation(star, bar);
        REQUIRE(w.has_value());
        VertexSet a = VertexSet::from_mask(4, w->a), b = VertexSet::from_mask(4, w->b);
        CHECK(is_connected(star, a));
        CHECK(is_connected(star, b));
        CHECK(is_connected(star, a & b));
        CHECK(delta(bar, w->a, w->b) < 0);
    }
}

TEST_CASE("zero normalization flag") {
    Game v(3);
    CHECK(is_zero_normalized(v));
    v.set_value(0b010u, 1);
    CHECK(!is_zero_normalized(v));
}

TEST_CASE("random game generators") {
    SUBCASE("convex generator: reproducible, convex, zero-normalized, superadditive") {
        CHECK(random_convex_game(5, 123) == random_convex_game(5, 123));
        CHECK(!(random_convex_game(5, 123) == random_convex_game(5, 124)));
        for (std::uint64_t seed = 1; seed <= 15; ++seed) {
            Game v = random_convex_game(5, seed);
            CHECK(is_convex(v));
            CHECK(is_superadditive(v));
            CHECK(is_zero_normalized(v));
        }
        Game trivial = random_convex_game(1, 9);
        CHECK(trivial.value(1) == 0);
    }
    SUBCASE("superadditive generator: reproducible, superadditive, zero-normalized") {
        CHECK(random_superadditive_game(5, 5) == random_superadditive_game(5, 5));
        bool any_nonconvex = false;
        for (std::uint64_t seed = 1; seed <= 15; ++seed) {
            Game v = random_superadditive_game(6, seed);
            CHECK(is_superadditive(v));
            CHECK(is_zero_normalized(v));
            if (!is_convex(v)) any_nonconvex = true;
        }
        CHECK(any_nonconvex); // the cover is not secretly producing convex games
    }
}

TEST_CASE("game files") {
    Game v = parse_game_text("# worth table\n2,3 1\n1,2,3 4\n", 3);
    CHECK(v.value(0b110u) == 1);
    CHECK(v.value(0b111u) == 4);
    CHECK(v.value(0b001u) == 0); // omitted lines default to zero

    auto line_of = [](const std::string& text) {
        try {
            parse_game_text(text, 3);
        } catch (const parse_error& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("1,2\n") == 1);        // missing value
    CHECK(line_of("1,2 1 9\n") == 1);    // trailing token
    CHECK(line_of("1,,2 1\n") == 1);     // empty vertex
    CHECK(line_of("1,x 1\n") == 1);      // bad vertex
    CHECK(line_of("0,1 1\n") == 1);      // out of range
    CHECK(line_of("1,4 1\n") == 1);      // out of range
    CHECK(line_of("2,3 1\n1,1 2\n") == 2); // repeated vertex
    CHECK_THROWS_AS(parse_game_text("1,2 1\n", 25), too_large);
}

TEST_CASE("restricted superadditive games stay superadditive") {
    // Random superadditive inputs on random graphs; the restriction never
    // breaks superadditivity.
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int n = 3 + static_cast<int>(seed % 4);
        WeightedGraph g = random_graph(n, 3, seed * 271, 0.45);
        Game v = random_superadditive_game(n, seed * 13);
        CHECK(is_superadditive(restricted_game(g, v, Correspondence::PMin)));

        for (Coalition s = 1; s <= v.full(); ++s)
            CHECK(is_superadditive(restricted_game(g, unanimity(n, s), Correspondence::PMin)));
    }
}

TEST_CASE("union-partition inequality for convex games") {
    // For convex v and any partition {B_1..B_p} of B with every A∩B_i
    // non-empty: v(A∪B) + sum v(A∩B_i) >= v(A) + sum v(B_i).
    std::uint64_t s = 2024;
    int checked = 0;
    while (checked < 200) {
        s = testutil::splitmix64(s);
        int n = 3 + static_cast<int>(s % 4);
        Game v = random_convex_game(n, s);
        Coalition full = v.full();
        Coalition a = static_cast<Coalition>(testutil::splitmix64(s ^ 1) & full);
        Coalition b = static_cast<Coalition>(testutil::splitmix64(s ^ 2) & full);
        if (a == 0 || b == 0) continue;

        // Deal the members of B into up to three blocks.
        std::vector<Coalition> blocks(1 + s % 3, 0);
        std::uint64_t deal = testutil::splitmix64(s ^ 3);
        for (int i = 0; i < n; ++i)
            if (b & bit(i)) {
                blocks[deal % blocks.size()] |= bit(i);
                deal /= 3;
            }
        std::erase(blocks, 0u);
        bool qualifying = true;
        for (Coalition blk : blocks)
            if ((blk & a) == 0) qualifying = false;
        if (!qualifying) continue;

        long long lhs = v.value(a | b), rhs = v.value(a);
        for (Coalition blk : blocks) {
            lhs += v.value(blk & a);
            rhs += v.value(blk);
        }
        CHECK(lhs >= rhs);
        ++checked;
    }
}
