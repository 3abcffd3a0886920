#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perichar/weights.hpp"

using namespace perichar;

TEST_CASE("parity case split") {
    CHECK(parity({0, 0}) == 0);
    CHECK(parity({1, 0}) == 1);
    CHECK(parity({1, 1}) == 1);
    CHECK(parity({0, -1}) == 0);
    CHECK(parity({-1, -1}) == 1);
    CHECK(parity({2, 0}) == 1);
    CHECK(parity({2, 2}) == 0);
}

TEST_CASE("rho") {
    CHECK(rho(1) == Weight{0});
    CHECK(rho(2) == Weight{1, 0});
    CHECK(rho(4) == Weight{3, 2, 1, 0});
    CHECK(rho(0).empty());
}

TEST_CASE("weight diagrams") {
    CHECK(to_diagram({0, 0, 0, 0}).bullets == std::vector<std::int64_t>{3, 2, 1, 0});
    // -3 eps_n - eps_{n-1} at n = 4
    CHECK(to_diagram({0, 0, -1, -3}).bullets == std::vector<std::int64_t>{3, 2, 0, -3});
    CHECK(from_diagram(to_diagram({2, 1, -1})) == Weight{2, 1, -1});
    CHECK_THROWS_WITH_AS(to_diagram({0, 1}), "weight not dominant", DomainError);
    CHECK_THROWS_WITH_AS(from_diagram(WeightDiagram{{1, 1}}), "diagram positions not strictly decreasing",
                         DomainError);
}

TEST_CASE("dominance order uses the reversed convention") {
    CHECK(dominance_leq({1, 0}, {0, 0}));
    CHECK(dominance_leq({1, 0}, {1, 0}));
    CHECK_FALSE(dominance_leq({0, -1}, {1, 0}));
    CHECK_THROWS_WITH_AS(dominance_leq({1, 0}, {0}), "rank mismatch", DomainError);
}

TEST_CASE("ball moves at rank two") {
    const auto zero_moves = ball_moves({0, 0});
    REQUIRE(zero_moves.size() == 2);
    CHECK(zero_moves[0] == BallMove{1, +1, {1, 0}});
    CHECK(zero_moves[1] == BallMove{0, -1, {0, -1}});

    const auto moves = ball_moves({1, 0});
    REQUIRE(moves.size() == 4);
    CHECK(moves[0] == BallMove{2, +1, {2, 0}});
    CHECK(moves[1] == BallMove{2, -1, {0, 0}});
    CHECK(moves[2] == BallMove{0, +1, {1, 1}});
    CHECK(moves[3] == BallMove{0, -1, {1, -1}});
}

TEST_CASE("ball moves at rank one") {
    const auto moves = ball_moves({5});
    REQUIRE(moves.size() == 2);
    CHECK(moves[0] == BallMove{5, +1, {6}});
    CHECK(moves[1] == BallMove{5, -1, {4}});
}

TEST_CASE("diagram rendering") {
    CHECK(render_diagram({1, 0}, -1, 3) == "-1  0  1  2  3\n o  b  o  b  o\n");
    CHECK(render_diagram({0}, -2, 2) == "-2 -1  0  1  2\n o  o  b  o  o\n");
    CHECK_THROWS_WITH_AS(render_diagram({0}, 3, 1), "empty diagram window", DomainError);
}

TEST_CASE("parity fault hook flips values") {
    testing::set_parity_fault(true);
    CHECK(parity({0, 0}) == 1);
    testing::set_parity_fault(false);
    CHECK(parity({0, 0}) == 0);
}
