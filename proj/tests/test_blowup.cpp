#include "doctest.h"

#include "dwc/blowup_polys.hpp"

using namespace dwc;

namespace {

Poly P(std::vector<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(v);
}

}  // namespace

TEST_CASE("S table") {
    CHECK(s_poly(1) == P({1}));
    CHECK(s_poly(3) == P({0, -1}));
    CHECK(s_poly(5) == P({2, 0, 1}));
    CHECK(s_poly(7) == P({0, -6, 0, -1}));
    CHECK(s_poly(9) == P({-36, 0, 12, 0, 1}));
    CHECK(s_poly(11) == P({0, 564, 0, -20, 0, -1}));
    for (int k = 0; k <= 16; k += 2) CHECK(s_poly(k).is_zero());
}

TEST_CASE("B table") {
    CHECK(b_poly(0) == P({1}));
    CHECK(b_poly(2).is_zero());
    CHECK(b_poly(4) == P({-2}));
    CHECK(b_poly(6) == P({0, 8}));
    CHECK(b_poly(8) == P({-4, 0, -32}));
    CHECK(b_poly(10) == P({0, 96, 0, 128}));
    for (int k = 1; k <= 15; k += 2) CHECK(b_poly(k).is_zero());
}

TEST_CASE("tables satisfy the recursion identically") {
    for (auto kind : {BlowupKind::S, BlowupKind::B}) {
        auto t = generate_blowup_table(kind, standard_seeds(kind), 18);
        CHECK(t.warnings.empty());
        for (int h = 0; h <= 14; ++h) {
            CAPTURE(h);
            CHECK(recursion_residual(t.polys, h).is_zero());
        }
    }
}

TEST_CASE("S5 follows from S1 and S3; S7 does not") {
    std::map<int, Poly> seeds{{1, P({1})}, {3, P({0, -1})}};
    auto t = generate_blowup_table(BlowupKind::S, seeds, 5);
    CHECK(t.polys[5] == P({2, 0, 1}));
    CHECK(t.solved_at.at(5) == 2);
    try {
        generate_blowup_table(BlowupKind::S, seeds, 7);
        FAIL("expected UndeterminedPolynomial");
    } catch (const UndeterminedPolynomial& e) {
        CHECK(e.index() == 7);
        CHECK(e.h() == 4);
    }
    // U_7 is a free parameter: any choice extends to a consistent table
    for (const Poly& u7 : {P({0, -6, 0, -1}), P({0}), P({5, 1})}) {
        auto seeds7 = seeds;
        seeds7[7] = u7;
        auto t7 = generate_blowup_table(BlowupKind::S, seeds7, 13);
        for (int h = 0; h <= 9; ++h) CHECK(recursion_residual(t7.polys, h).is_zero());
    }
}

TEST_CASE("B table regenerates from its three seeds") {
    auto t = generate_blowup_table(BlowupKind::B, {{0, P({1})}, {2, P({0})}, {4, P({-2})}}, 13);
    for (int h = 0; h <= 9; ++h) CHECK(recursion_residual(t.polys, h).is_zero());
    CHECK(t.polys[6] == P({0, 8}));
}

TEST_CASE("bad seeds are rejected") {
    CHECK_THROWS_AS(generate_blowup_table(BlowupKind::S, {{2, P({1})}}, 5), std::invalid_argument);
    CHECK_THROWS_AS(generate_blowup_table(BlowupKind::S, {{1, P({1})}, {3, P({0, -1})}, {5, P({3})}}, 9), std::domain_error);
    CHECK_THROWS_AS(s_poly(-1), std::invalid_argument);
}
