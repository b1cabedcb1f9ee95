#pragma once

#include "dwc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace dwc {

// Univariate polynomial in x with rational coefficients, dense, trimmed.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: constants convert implicitly
    Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x() { return Poly({Rational(0), Rational(1)}); }
    static Poly monomial(const Rational& c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);
    Poly operator-() const;

    Rational eval(const Rational& at) const;

    // exact division; throws if the remainder is nonzero
    Poly divide_exact(const Poly& d) const;
    void divmod(const Poly& d, Poly& q, Poly& r) const;

    std::string to_string(const std::string& var = "x") const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void trim();
    std::vector<Rational> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Poly& b);
Poly operator*(Poly a, const Rational& s);
Poly operator*(const Rational& s, Poly a);

// Sparse multivariate polynomial over Q in a fixed number of named variables.
class MPoly {
public:
    using Monomial = std::vector<int>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const Rational& c);
    static MPoly variable(std::vector<std::string> vars, std::size_t i);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Monomial, Rational>& terms() const { return t_; }

    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);
    bool is_zero() const { return t_.empty(); }
    int total_degree() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator*(const MPoly& o) const;
    MPoly& operator*=(const Rational& s);

    Rational eval(const std::vector<Rational>& at) const;

    // ordering: descending total degree, then lexicographic exponent order
    std::string to_string() const;

    bool operator==(const MPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

private:
    void check_compatible(const MPoly& o) const;
    std::vector<std::string> vars_;
    std::map<Monomial, Rational> t_;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);

// all exponent vectors in n variables of total degree <= k, graded-lex
std::vector<MPoly::Monomial> monomials_up_to(std::size_t n, int k);

}  // namespace dwc
