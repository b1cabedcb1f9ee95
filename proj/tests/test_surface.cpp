#include "doctest.h"

#include "dwc/surface.hpp"

using namespace dwc;

namespace {

const std::vector<std::string> kLineages{"p2",    "p2:b0",    "p2:b0s",      "p2:b0:b1", "p2:b2:b3",
                                          "p1xp1", "p1xp1:b0", "p1xp1:b0:b2", "p1xp1:b3s"};

Rational loc_sum(const EquivariantSurface& S, const OneParamSubgroup& T, const RationalClass& A, const RationalClass& B) {
    Rational s(0);
    for (std::size_t p = 0; p < S.num_fixpoints(); ++p) {
        long u = specialize(S.fixpoints()[p].wx, T), v = specialize(S.fixpoints()[p].wy, T);
        s += S.bundle_weight(A, p, T) * S.bundle_weight(B, p, T) / Rational(u * v);
    }
    return s;
}

}  // namespace

TEST_CASE("base surfaces and blowups have the expected invariants") {
    auto P2 = surface_from_lineage("p2");
    CHECK(P2.num_fixpoints() == 3);
    CHECK(P2.intersect(P2.canonical(), P2.canonical()) == 9);
    auto PP = surface_from_lineage("p1xp1");
    CHECK(PP.num_fixpoints() == 4);
    CHECK(PP.intersect(PP.canonical(), PP.canonical()) == 8);
    for (const auto& l : kLineages) {
        auto S = surface_from_lineage(l);
        CAPTURE(l);
        long K2 = S.intersect(S.canonical(), S.canonical());
        CHECK(K2 == (S.base() == BaseModel::P2 ? 9 : 8) - S.num_blowups());
        CHECK(S.num_fixpoints() == (S.base() == BaseModel::P2 ? 3u : 4u) + static_cast<std::size_t>(S.num_blowups()));
        CHECK(S.lineage() == l);
    }
    CHECK(surface_from_lineage("p2:b0").basis_names() == std::vector<std::string>{"H", "E1"});
}

TEST_CASE("localization reproduces the intersection form") {
    for (const auto& l : kLineages) {
        auto S = surface_from_lineage(l);
        CAPTURE(l);
        for (OneParamSubgroup T : {OneParamSubgroup{1, 3}, OneParamSubgroup{2, 5}}) {
            const std::size_t n = S.rank();
            RationalClass zero(n, Rational(0));
            // integral of 1 and of a single class vanish
            CHECK(loc_sum(S, T, zero, zero) == 0);
            for (std::size_t a = 0; a < n; ++a) {
                DivisorClass A(n, 0);
                A[a] = 1;
                for (std::size_t b = 0; b < n; ++b) {
                    DivisorClass B(n, 0);
                    B[b] = 1;
                    CHECK(loc_sum(S, T, to_rational(A), to_rational(B)) == S.intersect(A, B));
                }
                // the tangent weights pair with bundle weights to give K.D
                Rational s(0);
                for (std::size_t p = 0; p < S.num_fixpoints(); ++p) {
                    long u = specialize(S.fixpoints()[p].wx, T), v = specialize(S.fixpoints()[p].wy, T);
                    s += Rational(u + v) * S.bundle_weight(to_rational(A), p, T) / Rational(u * v);
                }
                CHECK(s == S.intersect(S.canonical(), A));
            }
            Rational c1sq(0);
            for (std::size_t p = 0; p < S.num_fixpoints(); ++p) {
                long u = specialize(S.fixpoints()[p].wx, T), v = specialize(S.fixpoints()[p].wy, T);
                c1sq += Rational((u + v) * (u + v)) / Rational(u * v);
            }
            CHECK(c1sq == S.intersect(S.canonical(), S.canonical()));
        }
    }
}

TEST_CASE("blowup charts") {
    auto S = surface_from_lineage("p2");
    auto B = blowup(S, 0);
    // q0 = (wx, wy - wx), q1 = (wy, wx - wy), O(E) weight minus the first chart weight
    const auto& p = S.fixpoints()[0];
    CHECK(B.fixpoints()[0].wx == p.wx);
    CHECK(B.fixpoints()[0].wy == p.wy - p.wx);
    CHECK(B.fixpoints()[1].wx == p.wy);
    CHECK(B.fixpoints()[1].wy == p.wx - p.wy);
    CHECK(B.bundle_weight(DivisorClass{0, 1}, 0) == -p.wx);
    CHECK(B.bundle_weight(DivisorClass{0, 1}, 1) == -p.wy);
    CHECK(B.bundle_weight(DivisorClass{0, 1}, 2) == Character{0, 0});
    auto Bs = blowup(S, 0, true);
    CHECK(Bs.fixpoints()[0].wx == p.wy);
    CHECK(Bs.lineage() == "p2:b0s");
    CHECK_THROWS_AS(blowup(S, 3), std::out_of_range);
}

TEST_CASE("relabeling") {
    auto S = surface_from_lineage("p2:b0");
    auto R = relabel_fixpoints(S, {3, 2, 1, 0});
    CHECK(R.fixpoints()[0].wx == S.fixpoints()[3].wx);
    CHECK(R.lineage() == "p2:b0:perm3,2,1,0");
    CHECK_THROWS_AS(relabel_fixpoints(S, {0, 0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(relabel_fixpoints(S, {0, 1}), std::invalid_argument);
}

TEST_CASE("class parsing and formatting") {
    auto S = surface_from_lineage("p2:b0");
    CHECK(parse_class(S, "2H-3E") == DivisorClass{2, -3});
    CHECK(parse_class(S, "H - E1") == DivisorClass{1, -1});
    CHECK(parse_class(S, "-E") == DivisorClass{0, -1});
    CHECK(parse_class(S, "0") == DivisorClass{0, 0});
    CHECK(format_class(S, {4, -5}) == "4H-5E1");
    CHECK(format_class(S, {0, 0}) == "0");
    CHECK_THROWS_AS(parse_class(S, "2G"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class(S, "3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class(S, ""), std::invalid_argument);
    CHECK_THROWS_AS(surface_from_lineage("p3"), std::invalid_argument);
    CHECK_THROWS_AS(surface_from_lineage("p2:x0"), std::invalid_argument);
    CHECK_THROWS_AS(surface_from_lineage("p2:b9"), std::out_of_range);
    for (const auto& l : kLineages) {
        auto T = surface_from_lineage(l);
        for (std::size_t i = 0; i < T.rank(); ++i) {
            DivisorClass D(T.rank(), 0);
            D[i] = static_cast<long>(i) - 2;
            CHECK(parse_class(T, format_class(T, D)) == D);
        }
    }
}
