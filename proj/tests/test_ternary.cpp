#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monogen/errors.hpp"
#include "monogen/resolvent.hpp"
#include "monogen/ternary.hpp"
#include "test_util.hpp"

using namespace monogen;
using monogen_test::rand_long;
using monogen_test::rand_unimodular2;
using monogen_test::rand_unimodular3;

TEST_CASE("anchor form basics") {
    ternary_form a = anchor_form();
    CHECK(a.g == mat3{{{0, 0, 1}, {0, -2, 0}, {1, 0, 0}}});
    CHECK(four_det(a) == 1);
    // Q(x,y,z) = x z - y^2
    CHECK(evaluate(a, {1, 0, 0}) == 0);
    CHECK(evaluate(a, {3, 2, 5}) == 15 - 4);
    CHECK(evaluate(a, {0, 1, 0}) == -1);
}

TEST_CASE("make_ternary validates the doubled Gram shape") {
    CHECK_THROWS_AS(make_ternary({{{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}}), precondition_failed);
    CHECK_THROWS_AS(make_ternary({{{2, 1, 0}, {0, 2, 0}, {0, 0, 2}}}), precondition_failed);
    CHECK(make_ternary({{{2, 1, 0}, {1, 2, 0}, {0, 0, -4}}}).g[0][1] == 1);
}

TEST_CASE("make_unimodular3 checks the determinant") {
    CHECK(identity3().det() == 1);
    CHECK_THROWS_AS(make_unimodular3({{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}), precondition_failed);
    unimodular3 s = make_unimodular3({{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}});
    CHECK(s.det() == -1);
}

TEST_CASE("act3 is an action and preserves four_det") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        unimodular3 g = rand_unimodular3(rng);
        unimodular3 h = rand_unimodular3(rng);
        ternary_pair p = pair_from_quartic(monogen_test::rand_form(rng, 4, 9));
        CHECK(act3(mul(g, h), p) == act3(g, act3(h, p)));
        CHECK(four_det(act3(g, p).a) == four_det(p.a));
    }
}

TEST_CASE("act2 is linear substitution on the pencil") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        unimodular2 g = rand_unimodular2(rng);
        unimodular2 h = rand_unimodular2(rng);
        ternary_pair p = pair_from_quartic(monogen_test::rand_form(rng, 4, 9));
        CHECK(act2(mul(g, h), p) == act2(g, act2(h, p)));
        // the resolvent transforms by the same substitution
        CHECK(resolvent_cubic(act2(g, p)).c == act(g, resolvent_cubic(p)).c);
    }
}

TEST_CASE("resolvent_cubic on closed-form pencils") {
    // x^4 + y^4 pairs with B = diag(2, 0, 2)
    ternary_pair p = pair_from_quartic(make_form({1, 0, 0, 0, 1}));
    CHECK(resolvent_cubic(p).c == std::vector<Int>{1, 0, -4, 0});
    // zero second member leaves the pure cube from the anchor
    ternary_pair trivial{anchor_form(), ternary_form{mat3{}}};
    CHECK(resolvent_cubic(trivial).c == std::vector<Int>{1, 0, 0, 0});
}

TEST_CASE("resolvent_cubic is invariant under act3") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        unimodular3 g = rand_unimodular3(rng);
        ternary_pair p = pair_from_quartic(monogen_test::rand_form(rng, 4, 9));
        CHECK(resolvent_cubic(act3(g, p)).c == resolvent_cubic(p).c);
        CHECK(disc_pair(act3(g, p)) == disc_pair(p));
    }
}

TEST_CASE("reduce_to_anchor fixes the anchor with the identity") {
    auto r = reduce_to_anchor(anchor_form(), 10);
    REQUIRE(r.has_value());
    CHECK(*r == identity3());
}

TEST_CASE("reduce_to_anchor requires four_det one") {
    // four_det -1
    CHECK_THROWS_AS(reduce_to_anchor(make_ternary({{{2, 1, 0}, {1, 0, 0}, {0, 0, 2}}}), 10),
                    precondition_failed);
    // four_det 4
    CHECK_THROWS_AS(reduce_to_anchor(make_ternary({{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}}), 10),
                    precondition_failed);
}

TEST_CASE("reduce_to_anchor solves an indefinite unit form") {
    ternary_form q = make_ternary({{{2, 1, 0}, {1, 0, 0}, {0, 0, -2}}});
    REQUIRE(four_det(q) == 1);
    auto r = reduce_to_anchor(q, 10);
    REQUIRE(r.has_value());
    ternary_pair moved = act3(*r, ternary_pair{q, q});
    CHECK(moved.a == anchor_form());
}

TEST_CASE("reduce_to_anchor inverts random transports of the anchor") {
    std::mt19937_64 rng(24);
    int reduced = 0;
    for (int trial = 0; trial < 40; ++trial) {
        unimodular3 g = rand_unimodular3(rng, 6);
        ternary_form q = act3(g, ternary_pair{anchor_form(), anchor_form()}).a;
        auto r = reduce_to_anchor(q, 60);
        if (!r) continue;   // admissible: the witness may sit past the height
        ++reduced;
        CHECK(act3(*r, ternary_pair{q, q}).a == anchor_form());
        CHECK(r->det() * r->det() == 1);
    }
    CHECK(reduced >= 35);
}

TEST_CASE("reduce_to_anchor is deterministic") {
    ternary_form q = make_ternary({{{2, 1, 0}, {1, 0, 0}, {0, 0, -2}}});
    auto r1 = reduce_to_anchor(q, 25);
    auto r2 = reduce_to_anchor(q, 25);
    REQUIRE(r1.has_value());
    CHECK(*r1 == *r2);
}
