#include "dwc/blowup_polys.hpp"

#include <mutex>

namespace dwc {

namespace {

const Poly& at(const std::vector<Poly>& U, int j) {
    static const Poly zero;
    if (j < 0) return zero;
    if (j >= static_cast<int>(U.size())) throw std::out_of_range("recursion needs U_" + std::to_string(j));
    return U[static_cast<std::size_t>(j)];
}

int parity(BlowupKind k) { return k == BlowupKind::S ? 1 : 0; }

}  // namespace

Poly recursion_residual(const std::vector<Poly>& U, int h) {
    Poly lhs, rhs;
    const Poly x = Poly::x();
    for (int i = 0; i <= h; ++i) {
        Rational c(binomial(h, i));
        Poly l = at(U, h + 4 - i) * at(U, i);
        l -= Rational(4) * (at(U, h + 3 - i) * at(U, i + 1));
        l += Rational(6) * (at(U, h + 2 - i) * at(U, i + 2));
        l -= Rational(4) * (at(U, h + 1 - i) * at(U, i + 3));
        l += at(U, h - i) * at(U, i + 4);
        lhs += c * l;
        Poly r = x * (at(U, h + 2 - i) * at(U, i));
        r += x * (at(U, h - i) * at(U, i + 2));
        r -= Rational(2) * (x * (at(U, h + 1 - i) * at(U, i + 1)));
        r += at(U, h - i) * at(U, i);
        rhs += c * r;
    }
    rhs *= Rational(-4);
    return lhs - rhs;
}

BlowupTable generate_blowup_table(BlowupKind kind, const std::map<int, Poly>& seeds, int kmax) {
    BlowupTable t;
    t.kind = kind;
    const int par = parity(kind);
    std::vector<bool> known(static_cast<std::size_t>(kmax) + 1, false);
    t.polys.assign(static_cast<std::size_t>(kmax) + 1, Poly());
    for (int k = 0; k <= kmax; ++k)
        if (k % 2 != par) known[static_cast<std::size_t>(k)] = true;
    for (const auto& [k, p] : seeds) {
        if (k < 0) throw std::invalid_argument("negative seed index");
        if (k % 2 != par && !p.is_zero()) throw std::invalid_argument("seed of the wrong parity must vanish");
        if (k > kmax) continue;
        t.polys[static_cast<std::size_t>(k)] = p;
        known[static_cast<std::size_t>(k)] = true;
    }
    for (int m = 0; m <= kmax; ++m) {
        if (known[static_cast<std::size_t>(m)]) continue;
        // U_m first occurs at h = m-4; try relations until another unknown enters
        int last_h = -1;
        for (int h = std::max(0, m - 4);; ++h) {
            bool other_unknown = false;
            for (int j = m + 1; j <= h + 4; ++j)
                if (j % 2 == par && (j > kmax || !known[static_cast<std::size_t>(j)])) other_unknown = true;
            if (other_unknown) break;
            std::vector<Poly> U(static_cast<std::size_t>(h) + 5);
            for (int j = 0; j <= std::min(kmax, h + 4); ++j) U[static_cast<std::size_t>(j)] = t.polys[static_cast<std::size_t>(j)];
            U[static_cast<std::size_t>(m)] = Poly();
            Poly r0 = recursion_residual(U, h);
            U[static_cast<std::size_t>(m)] = Poly(1);
            Poly coef = recursion_residual(U, h) - r0;
            last_h = h;
            if (coef.is_zero()) {
                if (!r0.is_zero())
                    throw std::domain_error("seeds violate the recursion at h=" + std::to_string(h));
                continue;
            }
            // r0 + coef * U_m = 0 (the relation is linear in U_m)
            t.polys[static_cast<std::size_t>(m)] = (-r0).divide_exact(coef);
            known[static_cast<std::size_t>(m)] = true;
            t.solved_at[m] = h;
            break;
        }
        if (!known[static_cast<std::size_t>(m)]) throw UndeterminedPolynomial(m, last_h);
    }
    for (int k = 0; k <= kmax; ++k) {
        if (k % 2 != par) continue;
        int expect = kind == BlowupKind::S ? (k - 1) / 2 : (k >= 4 ? k / 2 - 2 : -2);
        int got = t.polys[static_cast<std::size_t>(k)].degree();
        if (expect >= 0 && got != expect)
            t.warnings.push_back("degree of U_" + std::to_string(k) + " is " + std::to_string(got) + ", pattern says " +
                                 std::to_string(expect));
    }
    return t;
}

std::map<int, Poly> standard_seeds(BlowupKind kind) {
    const Poly x = Poly::x();
    if (kind == BlowupKind::S)
        return {{1, Poly(1)}, {3, -x}, {7, -(x * x * x) - Rational(6) * x}};
    return {{0, Poly(1)}, {2, Poly()}, {4, Poly(-2)}};
}

namespace {

const Poly& cached(BlowupKind kind, int k) {
    static std::mutex mu;
    static std::map<int, BlowupTable> tables;
    std::lock_guard<std::mutex> g(mu);
    int key = kind == BlowupKind::S ? 0 : 1;
    auto it = tables.find(key);
    if (it == tables.end() || static_cast<int>(it->second.polys.size()) <= k) {
        int kmax = std::max(k, 16);
        tables[key] = generate_blowup_table(kind, standard_seeds(kind), kmax);
        it = tables.find(key);
    }
    return it->second.polys[static_cast<std::size_t>(k)];
}

}  // namespace

Poly s_poly(int k) {
    if (k < 0) throw std::invalid_argument("negative index");
    return cached(BlowupKind::S, k);
}

Poly b_poly(int k) {
    if (k < 0) throw std::invalid_argument("negative index");
    return cached(BlowupKind::B, k);
}

}  // namespace dwc
