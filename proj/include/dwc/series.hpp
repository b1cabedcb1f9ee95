#pragma once

#include "dwc/poly.hpp"
#include "dwc/rational.hpp"

#include <stdexcept>
#include <vector>

namespace dwc {

// Polynomial in a nilpotent variable z, truncated above z^order.
// C is Rational or Poly (coefficients in Q[x]).
template <typename C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1, C(0)) {
        if (order < 0) throw std::invalid_argument("negative series order");
    }

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.c_[0] = C(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    C& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        check(o);
        TruncatedSeries r(order());
        int n = order();
        for (int i = 0; i <= n; ++i) {
            if (is_zero(c_[static_cast<std::size_t>(i)])) continue;
            for (int j = 0; i + j <= n; ++j) r[i + j] += (*this)[i] * o[j];
        }
        return r;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    // in-place multiplication by (a + b z)
    void mul_linear(const C& a, const C& b) {
        for (int k = order(); k >= 0; --k) {
            C v = (*this)[k] * a;
            if (k > 0) v += (*this)[k - 1] * b;
            (*this)[k] = v;
        }
    }

    // in-place multiplication by (a + b z^2)
    void mul_quadratic(const C& a, const C& b) {
        for (int k = order(); k >= 0; --k) {
            C v = (*this)[k] * a;
            if (k > 1) v += (*this)[k - 2] * b;
            (*this)[k] = v;
        }
    }

private:
    void check(const TruncatedSeries& o) const {
        if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    }
    static bool is_zero(const Rational& q) { return q == 0; }
    static bool is_zero(const Poly& p) { return p.is_zero(); }

    std::vector<C> c_;
};

// Inverse of a series with nonzero rational constant term.
inline TruncatedSeries<Rational> series_invert(const TruncatedSeries<Rational>& s) {
    if (s[0] == 0) throw std::domain_error("non-invertible series");
    int n = s.order();
    TruncatedSeries<Rational> r(n);
    Rational inv0 = 1 / s[0];
    r[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += s[j] * r[k - j];
        r[k] = -acc * inv0;
    }
    return r;
}

}  // namespace dwc
