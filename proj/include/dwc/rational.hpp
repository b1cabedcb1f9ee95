#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace dwc {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "a/b" or "a", always in lowest terms
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("bad rational: '" + s + "'");
    q.canonicalize();
    return q;
}

inline Rational pow(const Rational& b, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

inline Integer factorial(long n) {
    if (n < 0) throw std::domain_error("negative factorial");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// generalized binomial: a choose k for rational a
inline Rational binomial(const Rational& a, long k) {
    if (k < 0) return 0;
    Rational r(1);
    for (long j = 0; j < k; ++j) r *= (a - j);
    r /= Rational(factorial(k));
    return r;
}

}  // namespace dwc
