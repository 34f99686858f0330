#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leaperlab/board.hpp"

using namespace leaperlab;

TEST_CASE("standard boards") {
    Board b11 = standard_board(1, 1);
    CHECK(b11 == Board{0, 0, 0, 0});

    Board b34 = standard_board(3, 4);
    CHECK(b34.x_min == -1);
    CHECK(b34.x_max == 2);
    CHECK(b34.y_min == -1);
    CHECK(b34.y_max == 1);

    Board b22 = standard_board(2, 2);
    CHECK(b22 == Board{0, 1, 0, 1});

    CHECK_THROWS_AS(standard_board(0, 3), std::invalid_argument);
}

TEST_CASE("standard board is a fixed point and transpose-stable") {
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= 12; ++n) {
            Board b = standard_board(m, n);
            CHECK(b.is_standard());
            CHECK(b.height() == m);
            CHECK(b.width() == n);
            CHECK(standard_board(b.height(), b.width()) == b);
            CHECK(b.transposed().is_standard());
            CHECK(b.transposed() == standard_board(n, m));
        }
}

TEST_CASE("fit and smaller-or-congruent orders") {
    CHECK(fits(4, 3, 3, 5));
    CHECK(le(3, 4, 3, 4));
    CHECK_FALSE(le(4, 3, 3, 5));
    CHECK_FALSE(fits(4, 4, 3, 5));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(1, 15);
    for (int it = 0; it < 500; ++it) {
        int m1 = d(rng), n1 = d(rng), m2 = d(rng), n2 = d(rng), m3 = d(rng), n3 = d(rng);
        // le implies fits
        if (le(m1, n1, m2, n2)) CHECK(fits(m1, n1, m2, n2));
        // fits is invariant under transposing either argument
        CHECK(fits(m1, n1, m2, n2) == fits(n1, m1, m2, n2));
        CHECK(fits(m1, n1, m2, n2) == fits(m1, n1, n2, m2));
        // partial order sanity: reflexive + transitive, antisymmetric up to transpose
        CHECK(fits(m1, n1, m1, n1));
        CHECK(le(m1, n1, m1, n1));
        if (le(m1, n1, m2, n2) && le(m2, n2, m3, n3)) CHECK(le(m1, n1, m3, n3));
        if (fits(m1, n1, m2, n2) && fits(m2, n2, m3, n3)) CHECK(fits(m1, n1, m3, n3));
        if (le(m1, n1, m2, n2) && le(m2, n2, m1, n1)) CHECK((m1 == m2 && n1 == n2));
        if (fits(m1, n1, m2, n2) && fits(m2, n2, m1, n1))
            CHECK(((m1 == m2 && n1 == n2) || (m1 == n2 && n1 == m2)));
    }
}

TEST_CASE("bbox and ball") {
    std::vector<Cell> s{{0, 0}, {2, 1}};
    CHECK(bbox(s) == Board{0, 2, 0, 1});
    CHECK(ball({0, 0}, 1) == Board{-1, 1, -1, 1});
    std::vector<Cell> single{{5, 5}};
    CHECK(bbox(single) == Board{5, 5, 5, 5});
    std::vector<Cell> empty;
    CHECK_THROWS_AS(bbox(empty), std::invalid_argument);

    // bbox is the subset-smallest board containing the set
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int it = 0; it < 200; ++it) {
        std::vector<Cell> cells;
        int k = 1 + it % 7;
        for (int i = 0; i < k; ++i) cells.push_back({d(rng), d(rng)});
        Board bb = bbox(cells);
        for (const Cell& c : cells) CHECK(bb.contains(c));
        // shrinking any side loses a cell
        auto loses = [&](auto pred) {
            for (const Cell& c : cells)
                if (pred(c)) return true;
            return false;
        };
        CHECK(loses([&](const Cell& c) { return c.x == bb.x_min; }));
        CHECK(loses([&](const Cell& c) { return c.x == bb.x_max; }));
        CHECK(loses([&](const Cell& c) { return c.y == bb.y_min; }));
        CHECK(loses([&](const Cell& c) { return c.y == bb.y_max; }));
    }
}

TEST_CASE("cell ordering is row-major") {
    Board b = standard_board(2, 2);
    auto cs = b.cells();
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == Cell{0, 0});
    CHECK(cs[1] == Cell{1, 0});
    CHECK(cs[2] == Cell{0, 1});
    CHECK(cs[3] == Cell{1, 1});
    CHECK(cell_parity({0, 1}) == 1);
    CHECK(cell_parity({-1, -1}) == 0);
}
