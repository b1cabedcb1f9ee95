#include "doctest.h"
#include "oracles.hpp"

#include "dwc/bott.hpp"
#include "dwc/hilbert.hpp"

#include <random>

using namespace dwc;

namespace {

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : partitions(k)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("ext terms: small examples") {
    Partition e, one({1});
    CHECK(ext_terms(e, e).empty());
    auto t = ext_terms(one, one);
    REQUIRE(t.size() == 2);
    std::sort(t.begin(), t.end());
    // a single point: the two coordinate weights, in the dual convention
    CHECK(t[0] == WeightTerm{-1, 0});
    CHECK(t[1] == WeightTerm{0, -1});
    CHECK(ext_terms(one, e).size() == 1);
    CHECK(ext_terms(e, Partition({2, 1})).size() == 3);
}

TEST_CASE("ext terms have |P|+|Q| entries") {
    auto ps = partitions_up_to(5);
    for (const auto& P : ps)
        for (const auto& Q : ps) CHECK(ext_terms(P, Q).size() == static_cast<std::size_t>(P.size() + Q.size()));
}

TEST_CASE("ext terms agree with the free-resolution oracle") {
    auto ps = partitions_up_to(3);
    for (const auto& P : ps) {
        for (const auto& Q : ps) {
            CAPTURE(P.to_string());
            CAPTURE(Q.to_string());
            oracle::Character2 mine;
            for (const auto& w : ext_terms(P, Q)) mine[{w.cx, w.cy}] += 1;
            CHECK(mine == oracle::ext_character(Q, P));
        }
    }
}

TEST_CASE("configuration counts match the generating function") {
    for (std::size_t m = 1; m <= 6; ++m) {
        auto gf = oracle::partition_series(6, static_cast<int>(2 * m));
        for (int d = 0; d <= 6; ++d) {
            ConfigSet cs(m, d);
            CAPTURE(m);
            CAPTURE(d);
            CHECK(Integer(static_cast<unsigned long>(cs.size())) == gf[static_cast<std::size_t>(d)]);
        }
    }
    auto all = enumerate_configs(3, 2);
    for (const auto& c : all) CHECK(c.total() == 2);
    CHECK_THROWS_AS(ConfigSet(0, 1), std::invalid_argument);
}

TEST_CASE("tangent factor count is 2d on random configurations") {
    std::mt19937 rng(20261016);
    auto S = surface_from_lineage("p1xp1:b0");
    DeltaEngine eng;
    for (int trial = 0; trial < 200; ++trial) {
        int d = 1 + static_cast<int>(rng() % 6);
        const OneParamSubgroup T = eng.pick_generic_T(S, d);
        ConfigSet cs(S.num_fixpoints(), d);
        FixConfig c = cs.config(rng() % cs.size());
        std::size_t count = 0;
        Integer prod(1);
        for (std::size_t i = 0; i < S.num_fixpoints(); ++i) {
            long u = specialize(S.fixpoints()[i].wx, T), v = specialize(S.fixpoints()[i].wy, T);
            for (const Partition* p : {&c.P[i], &c.Q[i]}) {
                for (const auto& w : ext_terms(*p, *p)) {
                    ++count;
                    prod *= w.cx * u + w.cy * v;
                }
            }
        }
        CHECK(count == static_cast<std::size_t>(2 * d));
        CHECK(tangent_factors(c, S, T) == prod);
    }
}

TEST_CASE("genericity of one-parameter subgroups") {
    DeltaEngine eng;
    auto P2 = surface_from_lineage("p2");
    CHECK_FALSE(eng.is_generic(P2, 1, {1, 1}));
    ConfigSet cs(P2.num_fixpoints(), 1);
    bool vanishing = false;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        try {
            tangent_factors(cs.config(i), P2, {1, 1});
        } catch (const NonGenericSubgroup&) {
            vanishing = true;
        }
    }
    CHECK(vanishing);
    auto T = eng.pick_generic_T(P2, 0);
    CHECK(T == OneParamSubgroup{1, 2});
    CHECK(eng.pick_generic_T(P2, 3) == eng.pick_generic_T(P2, 3));
    auto gens = eng.generic_subgroups(surface_from_lineage("p2:b0"), 2, 3);
    CHECK(gens.size() == 3);
    for (const auto& g : gens) CHECK(eng.is_generic(surface_from_lineage("p2:b0"), 2, g));
}
