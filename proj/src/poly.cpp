#include "dwc/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dwc {

namespace {

// sign-aware joiner for "a*x^2 - 3/2*x + 1" style output
void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& mono) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
        if (neg) os << "-";
    } else {
        os << (neg ? " - " : " + ");
    }
    if (mono.empty()) {
        os << a.get_str();
    } else if (a == 1) {
        os << mono;
    } else {
        os << a.get_str() << "*" << mono;
    }
}

}  // namespace

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int deg) {
    if (deg < 0) throw std::invalid_argument("negative degree");
    std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Rational Poly::eval(const Rational& at) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
    return r;
}

void Poly::divmod(const Poly& d, Poly& q, Poly& r) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    r = *this;
    q = Poly();
    std::vector<Rational> qc;
    int dd = d.degree();
    if (r.degree() >= dd) qc.resize(static_cast<std::size_t>(r.degree() - dd + 1));
    const Rational& lead = d.c_.back();
    while (!r.is_zero() && r.degree() >= dd) {
        int shift = r.degree() - dd;
        Rational f = r.c_.back() / lead;
        qc[static_cast<std::size_t>(shift)] = f;
        for (int i = 0; i <= dd; ++i) r.c_[static_cast<std::size_t>(i + shift)] -= f * d.c_[static_cast<std::size_t>(i)];
        r.trim();
    }
    q = Poly(std::move(qc));
}

Poly Poly::divide_exact(const Poly& d) const {
    Poly q, r;
    divmod(d, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        std::string mono;
        if (k == 1) mono = var;
        else if (k > 1) mono = var + "^" + std::to_string(k);
        append_term(os, first, c, mono);
        first = false;
    }
    return os.str();
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }
Poly operator*(Poly a, const Rational& s) { return a *= s; }
Poly operator*(const Rational& s, Poly a) { return a *= s; }

// ---- MPoly

MPoly MPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MPoly p(std::move(vars));
    p.add_term(Monomial(p.nvars(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, std::size_t i) {
    MPoly p(std::move(vars));
    if (i >= p.nvars()) throw std::out_of_range("variable index");
    Monomial m(p.nvars(), 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

void MPoly::check_compatible(const MPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("MPoly variable sets differ");
}

Rational MPoly::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != vars_.size()) throw std::invalid_argument("monomial arity");
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_compatible(o);
    MPoly r(vars_);
    for (const auto& [ma, ca] : t_) {
        for (const auto& [mb, cb] : o.t_) {
            Monomial m(ma);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MPoly& MPoly::operator*=(const Rational& s) {
    if (s == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [m, c] : t_) c *= s;
    return *this;
}

Rational MPoly::eval(const std::vector<Rational>& at) const {
    if (at.size() != vars_.size()) throw std::invalid_argument("MPoly eval arity");
    Rational r(0);
    for (const auto& [m, c] : t_) {
        Rational v = c;
        for (std::size_t i = 0; i < m.size(); ++i) v *= pow(at[i], static_cast<unsigned>(m[i]));
        r += v;
    }
    return r;
}

std::string MPoly::to_string() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> items(t_.begin(), t_.end());
    auto deg = [](const Monomial& m) {
        int s = 0;
        for (int e : m) s += e;
        return s;
    };
    std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
        int da = deg(a.first), db = deg(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : items) {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        append_term(os, first, c, mono);
        first = false;
    }
    return os.str();
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

std::vector<MPoly::Monomial> monomials_up_to(std::size_t n, int k) {
    std::vector<MPoly::Monomial> out;
    MPoly::Monomial cur(n, 0);
    // recursive fill, degree-major
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
    };
    for (int d = 0; d <= k; ++d) {
        if (n == 0) {
            if (d == 0) out.emplace_back();
            continue;
        }
        rec(rec, 0, d);
    }
    return out;
}

}  // namespace dwc
