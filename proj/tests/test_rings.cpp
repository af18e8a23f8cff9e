#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monogen/errors.hpp"
#include "monogen/rings.hpp"
#include "test_util.hpp"

using namespace monogen;
using monogen_test::rand_form;
using monogen_test::rand_long;

static rank_ring disc49_ring() { return cubic_ring_from_form(make_form({1, 1, -2, -1})); }

TEST_CASE("cubic ring of the discriminant 49 form") {
    rank_ring r = disc49_ring();
    CHECK(r.rank == 3);
    CHECK(r.m == std::vector<std::vector<Int>>{{2, 1}, {1, 1}});
    CHECK(r.c[0][0] == std::vector<Int>{-1, 1});
    CHECK(r.c[0][1] == std::vector<Int>{0, 0});
    CHECK(r.c[1][1] == std::vector<Int>{1, -2});
    CHECK(disc_ring(r) == 49);
    CHECK(content_ring(r) == 1);
}

TEST_CASE("cubic ring discriminant equals form discriminant") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        binary_form f = rand_form(rng, 3, 9);
        CHECK(disc_ring(cubic_ring_from_form(f)) == discriminant(f));
    }
}

TEST_CASE("index of a cubic ring element is the form value") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 80; ++trial) {
        binary_form f = rand_form(rng, 3, 9);
        rank_ring r = cubic_ring_from_form(f);
        Int x = rand_long(rng, -6, 6), y = rand_long(rng, -6, 6);
        ring_element alpha{{0, x, y}};
        CHECK(monogenizer_index(r, alpha) == abs(evaluate(f, x, y)));
    }
}

TEST_CASE("quadratic rings") {
    CHECK(disc_ring(quadratic_ring(5)) == 5);
    CHECK(disc_ring(quadratic_ring(8)) == 8);
    CHECK(disc_ring(quadratic_ring(12)) == 12);
    CHECK(disc_ring(quadratic_ring(-4)) == -4);
    CHECK_THROWS_AS(quadratic_ring(3), precondition_failed);
    CHECK_THROWS_AS(quadratic_ring(-1), precondition_failed);
    // e_1 generates, and inside the box it is the single canonical choice
    CHECK(enumerate_monogenizers(quadratic_ring(5), 5).size() == 1);
}

TEST_CASE("make_ring validates the table") {
    rank_ring r = disc49_ring();
    CHECK(make_ring(r.rank, r.m, r.c) == r);
    CHECK_THROWS_AS(make_ring(3, {{1}}, r.c), precondition_failed);
    // associativity failure: tweak one structure constant
    auto bad_c = r.c;
    bad_c[1][1][0] += 1;
    CHECK_THROWS_AS(make_ring(3, r.m, bad_c), precondition_failed);
    CHECK_THROWS_AS(make_ring(5, {}, {}), precondition_failed);
}

TEST_CASE("ring multiplication against hand values") {
    rank_ring r = disc49_ring();
    ring_element e1 = basis_element(r, 1), e2 = basis_element(r, 2);
    // e1 e1 = m[0][0] + c[0][0] . (e1, e2)
    CHECK(mul(r, e1, e1) == ring_element{{2, -1, 1}});
    CHECK(mul(r, e1, e2) == ring_element{{1, 0, 0}});
    CHECK(mul(r, e2, e2) == ring_element{{1, 1, -2}});
    CHECK(mul(r, basis_element(r, 0), e2) == e2);
}

TEST_CASE("char_poly of scalars and generators") {
    rank_ring r = disc49_ring();
    CHECK(char_poly(r, ring_element{{1, 0, 0}}) == std::vector<Int>{1, -3, 3, -1});
    CHECK(char_poly(r, ring_element{{0, 0, 0}}) == std::vector<Int>{1, 0, 0, 0});

    // theta inside the invariant order of a monic quartic has the quartic
    // as characteristic polynomial
    rank_ring q = invariant_order(make_form({1, 0, 0, -1, 1}));
    CHECK(char_poly(q, basis_element(q, 1)) == std::vector<Int>{1, 0, 0, -1, 1});
    rank_ring s = invariant_order(make_form({1, -4, 6, -4, 2}));
    CHECK(char_poly(s, basis_element(s, 1)) == std::vector<Int>{1, -4, 6, -4, 2});
}

TEST_CASE("monogenizer_index in a monic quartic order") {
    rank_ring q = invariant_order(make_form({1, 0, 0, -1, 1}));
    CHECK(monogenizer_index(q, basis_element(q, 1)) == 1);
    CHECK(monogenizer_index(q, ring_element{{0, 2, 0, 0}}) == 64);
    CHECK(monogenizer_index(q, ring_element{{1, 0, 0, 0}}) == 0);
    CHECK(monogenizer_index(q, ring_element{{5, 1, 0, 0}}) == 1);
}

TEST_CASE("invariant order of a quartic with leading coefficient two") {
    rank_ring r = invariant_order(make_form({2, 1, 3, 1, 1}));
    CHECK(r.rank == 4);
    CHECK(r.m == std::vector<std::vector<Int>>{{0, 0, -2}, {0, -2, -1}, {-2, -1, -3}});
    CHECK(r.c[0][0] == std::vector<Int>{-1, 2, 0});
    CHECK(r.c[0][1] == std::vector<Int>{-3, 0, 2});
    CHECK(r.c[0][2] == std::vector<Int>{-1, 0, 0});
    CHECK(r.c[1][1] == std::vector<Int>{-1, -3, 1});
    CHECK(r.c[1][2] == std::vector<Int>{-1, -1, 0});
    CHECK(r.c[2][2] == std::vector<Int>{0, -1, -1});
    CHECK(disc_ring(r) == 112);
    CHECK(disc_ring(r) == discriminant(make_form({2, 1, 3, 1, 1})));
}

TEST_CASE("invariant order accepts a negative leading coefficient") {
    binary_form f = make_form({-3, -3, 2, -4, 2});
    rank_ring r = invariant_order(f);
    CHECK(disc_ring(r) == discriminant(f));
    CHECK(content_ring(r) == 1);
}

TEST_CASE("invariant order matches ring invariants on random forms") {
    std::mt19937_64 rng(33);
    int seen = 0;
    while (seen < 60) {
        binary_form f = rand_form(rng, 4, 6, true);
        if (discriminant(f) == 0) continue;
        ++seen;
        rank_ring r = invariant_order(f);
        CHECK(disc_ring(r) == discriminant(f));
        CHECK(content_ring(r) == content(f));
    }
    CHECK_THROWS_AS(invariant_order(make_form({1, 2, 1})), precondition_failed);
    CHECK_THROWS_AS(invariant_order(make_form({0, 1, 1, 1})), precondition_failed);
}

TEST_CASE("content and rescale") {
    rank_ring r2 = cubic_ring_from_form(make_form({2, 0, 0, 2}));
    CHECK(r2.m == std::vector<std::vector<Int>>{{0, -4}, {-4, 0}});
    CHECK(r2.c[0][0] == std::vector<Int>{0, 2});
    CHECK(r2.c[1][1] == std::vector<Int>{-2, 0});
    CHECK(disc_ring(r2) == -432);
    CHECK(content_ring(r2) == 2);

    rank_ring r3 = rescale(disc49_ring(), 3);
    CHECK(content_ring(r3) == 3);
    CHECK(disc_ring(r3) == 49 * 81);
    CHECK_THROWS_AS(content_ring(quadratic_ring(0)), degenerate_discriminant);
}

TEST_CASE("enumerate_monogenizers on the discriminant 49 ring") {
    std::vector<std::pair<long, long>> expect = {{0, 1}, {1, -2}, {1, -1}, {1, 0}, {1, 1},
                                                 {2, -1}, {4, -9}, {5, 4}, {9, -5}};
    auto gens = enumerate_monogenizers(disc49_ring(), 100);
    REQUIRE(gens.size() == expect.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        CHECK(gens[i].x == std::vector<Int>{0, expect[i].first, expect[i].second});
    }
    // shrinking the box keeps exactly the members that fit
    CHECK(enumerate_monogenizers(disc49_ring(), 2).size() == 6);
}

TEST_CASE("enumerated generators really have index one") {
    rank_ring q = invariant_order(make_form({1, 1, 1, 1, 1}));
    auto gens = enumerate_monogenizers(q, 4);
    CHECK(!gens.empty());
    for (const auto& g : gens) {
        CHECK(g.x[0] == 0);
        CHECK(monogenizer_index(q, g) == 1);
    }
}
