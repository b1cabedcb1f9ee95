#include "doctest.h"
#include "oracles.hpp"

#include "dwc/linsolve.hpp"
#include "dwc/partition.hpp"
#include "dwc/poly.hpp"
#include "dwc/series.hpp"

#include <random>
#include <set>

using namespace dwc;

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    CHECK(binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(20) == Integer("2432902008176640000"));
}

TEST_CASE("univariate polynomials") {
    const Poly x = Poly::x();
    Poly p = (x + Poly(1)) * (x + Poly(1));
    CHECK(p.to_string() == "x^2 + 2*x + 1");
    CHECK((-(x * x * x) - Rational(6) * x).to_string() == "-x^3 - 6*x");
    CHECK(p.divide_exact(x + Poly(1)) == x + Poly(1));
    CHECK_THROWS_AS(p.divide_exact(x), std::domain_error);
    CHECK(p.eval(make_rational(1, 2)) == make_rational(9, 4));
    CHECK(Poly().degree() == -1);
    CHECK((p - p).is_zero());
    Poly q, r;
    p.divmod(x - Poly(1), q, r);
    CHECK(q * (x - Poly(1)) + r == p);
    CHECK(r == Poly(4));
}

TEST_CASE("multivariate polynomials") {
    const std::vector<std::string> v{"a", "b"};
    MPoly a = MPoly::variable(v, 0), b = MPoly::variable(v, 1);
    MPoly s = a + b;
    MPoly sq = s * s;
    CHECK(sq.to_string() == "a^2 + 2*a*b + b^2");
    CHECK(sq.eval({Rational(2), Rational(3)}) == 25);
    CHECK(sq.total_degree() == 2);
    CHECK((sq - sq).is_zero());
    CHECK_THROWS(sq + MPoly::variable({"c"}, 0));
    CHECK(monomials_up_to(4, 2).size() == 15);
    CHECK(monomials_up_to(4, 0).size() == 1);
}

TEST_CASE("truncated series inversion") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries<Rational> s(8);
        for (int k = 0; k <= 8; ++k) s[k] = make_rational(dist(rng), 1 + (dist(rng) + 5));
        if (s[0] == 0) s[0] = 3;
        auto prod = s * series_invert(s);
        CHECK(prod[0] == 1);
        for (int k = 1; k <= 8; ++k) CHECK(prod[k] == 0);
    }
    TruncatedSeries<Rational> z(3);
    z[1] = 1;
    CHECK_THROWS_AS(series_invert(z), std::domain_error);
    CHECK_THROWS_AS(TruncatedSeries<Rational>(2) * TruncatedSeries<Rational>(3), std::invalid_argument);

    auto lin = TruncatedSeries<Rational>::one(4);
    lin.mul_linear(Rational(1), Rational(2));  // 1 + 2z
    lin.mul_quadratic(Rational(1), Rational(-1));  // (1 + 2z)(1 - z^2)
    CHECK(lin[0] == 1);
    CHECK(lin[1] == 2);
    CHECK(lin[2] == -1);
    CHECK(lin[3] == -2);
    CHECK(lin[4] == 0);
}

TEST_CASE("partition counts match the generating function") {
    auto gf = oracle::partition_series(14);
    for (int n = 0; n <= 14; ++n) {
        auto ps = partitions(n);
        CHECK(Integer(static_cast<long>(ps.size())) == gf[static_cast<std::size_t>(n)]);
        std::set<std::vector<int>> seen;
        for (const auto& p : ps) {
            CHECK(p.size() == n);
            seen.insert(p.parts());
        }
        CHECK(seen.size() == ps.size());
    }
    CHECK(Partition({3, 1, 1}).to_string() == "(3,1,1)");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("exact linear systems") {
    Matrix A{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    auto x = solve_linear_system(A, {Rational(3), Rational(5)});
    CHECK(x[0] == make_rational(4, 5));
    CHECK(x[1] == make_rational(7, 5));

    // consistent overdetermined
    Matrix B{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}};
    auto y = solve_linear_system(B, {Rational(1), Rational(2), Rational(3)});
    CHECK(y == std::vector<Rational>{Rational(1), Rational(2)});

    // inconsistent overdetermined
    try {
        solve_linear_system(B, {Rational(1), Rational(2), Rational(4)});
        FAIL("expected InconsistentSystem");
    } catch (const InconsistentSystem& e) {
        CHECK(e.row() < 3);
    }

    Matrix C{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(solve_linear_system(C, {Rational(1), Rational(2)}), RankDeficient);

    Matrix D{{Rational(1), Rational(2), Rational(0)}, {Rational(0), Rational(1), Rational(4)}, {Rational(5), Rational(6), Rational(0)}};
    Matrix Di = invert_matrix(D);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Rational s(0);
            for (std::size_t k = 0; k < 3; ++k) s += D[i][k] * Di[k][j];
            CHECK(s == (i == j ? 1 : 0));
        }
}
