#include "doctest.h"

#include "dwc/walls.hpp"

using namespace dwc;

namespace {

struct Case {
    ClosedFormModel model;
    std::optional<Rational> delta;
};

std::vector<Case> endpoint_cases() {
    return {{ClosedFormModel::HatP2, std::nullopt},
            {ClosedFormModel::HatP2, make_rational(1, 2)},
            {ClosedFormModel::HatP2, make_rational(1, 3)},
            {ClosedFormModel::HatP2, make_rational(0)},
            {ClosedFormModel::P1xP1, std::nullopt},
            {ClosedFormModel::P1xP1, make_rational(1)},
            {ClosedFormModel::P1xP1, make_rational(3, 2)},
            {ClosedFormModel::P1xP1, make_rational(1, 3)}};
}

}  // namespace

TEST_CASE("polarization parsing and lexicographic sign") {
    auto L = parse_polarization("1,-1;0,1");
    REQUIRE(L.levels.size() == 2);
    CHECK(L.levels[1] == DivisorClass{0, 1});
    CHECK(format_polarization(L) == "1,-1;0,1");
    CHECK_THROWS_AS(parse_polarization(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_polarization("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polarization("1,0;1"), std::invalid_argument);
    auto S = surface_from_lineage("p2:b0");
    // (H - E).(H - E) = 0, then (H - E).E = 1
    CHECK(lex_sign(S, {1, -1}, L) == 1);
    CHECK(lex_sign(S, {0, 0}, L) == 0);
}

TEST_CASE("wall numbers") {
    auto S = surface_from_lineage("p2:b0");
    auto w = wall_numbers(S, {4, -5}, 6);
    CHECK(w.d == 0);
    CHECK(w.e == 2);
    auto v = wall_numbers(S, {2, -3}, 6);
    CHECK(v.d == 1);
    CHECK(v.e == 3);
    CHECK_THROWS_AS(wall_numbers(S, {4, -5}, 5), std::invalid_argument);
    CHECK_THROWS_AS(wall_numbers(S, {4, -5}, 2), std::invalid_argument);
}

TEST_CASE("wall search on the blown-up plane") {
    auto S = surface_from_lineage("p2:b0");
    auto ws = search_walls(S, {0, 1}, 2, parse_polarization("1,-1;0,1"), parse_polarization("1,0;0,-1"));
    CHECK(ws.rigorous);
    CHECK(ws.walls == std::vector<DivisorClass>{{2, -3}, {4, -5}});
    // no room for walls
    CHECK(enumerate_walls(S, {0, 1}, 0, parse_polarization("1,-1;0,1"), parse_polarization("1,0;0,-1")).empty());
}

TEST_CASE("generic search equals the closed forms, all eight (model, c1) cases, c2 <= 6") {
    for (const auto& cs : endpoint_cases()) {
        const auto S = surface_from_lineage(cs.model == ClosedFormModel::HatP2 ? "p2:b0" : "p1xp1");
        auto [Lm, Lp] = closed_form_endpoints(cs.model, cs.delta);
        for (long c1a = 0; c1a < 2; ++c1a) {
            for (long c1b = 0; c1b < 2; ++c1b) {
                DivisorClass c1{c1a, c1b};
                for (long c2 = 0; c2 <= 6; ++c2) {
                    CAPTURE(static_cast<int>(cs.model));
                    CAPTURE(c1a);
                    CAPTURE(c1b);
                    CAPTURE(c2);
                    CAPTURE(format_polarization(Lp));
                    auto ws = search_walls(S, c1, c2, Lm, Lp);
                    CHECK(ws.walls == closed_form_walls(cs.model, c1, c2, cs.delta));
                    const long N = 4 * c2 - S.intersect(c1, c1) - 3;
                    for (const auto& xi : ws.walls) {
                        CHECK(lex_sign(S, xi, Lm) < 0);
                        CHECK(lex_sign(S, xi, Lp) > 0);
                        // xi = c1 mod 2
                        for (std::size_t i = 0; i < 2; ++i) CHECK((xi[i] - c1[i]) % 2 == 0);
                        auto w = wall_numbers(S, xi, N);
                        CHECK(w.d >= 0);
                        DivisorClass minus{-xi[0], -xi[1]};
                        auto wm = wall_numbers(S, minus, N);
                        CHECK(wm.d == w.d);
                        CHECK(wm.e - w.e == -S.intersect(xi, S.canonical()));
                    }
                }
            }
        }
    }
}

TEST_CASE("closed forms reject bad endpoints") {
    CHECK_THROWS_AS(closed_form_walls(ClosedFormModel::HatP2, {0, 1}, 2, make_rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_walls(ClosedFormModel::P1xP1, {0, 1}, 2, make_rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_walls(ClosedFormModel::P1xP1, {0, 1, 0}, 2, std::nullopt), std::invalid_argument);
}

TEST_CASE("walls on the twice blown-up surface") {
    auto S = surface_from_lineage("p1xp1:b0");
    auto H1 = parse_polarization("1,0,0;0,1,0;0,0,-1");
    auto H2 = parse_polarization("1,0,0;0,1,-1;0,0,1");
    auto ws = search_walls(S, {1, 0, -1}, 2, H2, H1);
    for (const auto& xi : ws.walls) {
        CHECK(lex_sign(S, xi, H2) < 0);
        CHECK(lex_sign(S, xi, H1) > 0);
    }
}
