#include "dwc/walls.hpp"

#include "dwc/linsolve.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dwc {

LexPolarization parse_polarization(const std::string& text) {
    LexPolarization L;
    std::stringstream ss(text);
    std::string level;
    while (std::getline(ss, level, ';')) {
        DivisorClass D;
        std::stringstream ls(level);
        std::string c;
        while (std::getline(ls, c, ',')) {
            std::size_t pos = 0;
            long v = std::stol(c, &pos);
            if (pos != c.size()) throw std::invalid_argument("bad polarization '" + text + "'");
            D.push_back(v);
        }
        if (D.empty()) throw std::invalid_argument("bad polarization '" + text + "'");
        if (!L.levels.empty() && D.size() != L.levels[0].size())
            throw std::invalid_argument("polarization levels differ in length");
        L.levels.push_back(D);
    }
    if (L.levels.empty()) throw std::invalid_argument("empty polarization");
    return L;
}

std::string format_polarization(const LexPolarization& L) {
    std::string s;
    for (std::size_t k = 0; k < L.levels.size(); ++k) {
        if (k) s += ";";
        for (std::size_t i = 0; i < L.levels[k].size(); ++i) s += (i ? "," : "") + std::to_string(L.levels[k][i]);
    }
    return s;
}

int lex_sign(const EquivariantSurface& S, const DivisorClass& xi, const LexPolarization& L) {
    for (const auto& l : L.levels) {
        long v = S.intersect(xi, l);
        if (v != 0) return v > 0 ? 1 : -1;
    }
    return 0;
}

WallNumbers wall_numbers(const EquivariantSurface& S, const DivisorClass& xi, long N) {
    long x2 = S.intersect(xi, xi);
    long num = N + 3 + x2;
    if (num % 4 != 0 || num < 0) throw std::invalid_argument("not a wall for this N");
    WallNumbers w;
    w.d = num / 4;
    DivisorClass xk = xi;
    for (std::size_t i = 0; i < xk.size(); ++i) xk[i] -= S.canonical()[i];
    long t = S.intersect(xi, xk);
    if (t % 2 != 0) throw std::logic_error("xi.(xi-K) is odd");
    w.e = -t / 2 + w.d + 1;
    return w;
}

namespace {

Integer isqrt_floor(const Rational& q) {
    if (q <= 0) return 0;
    Integer f = q.get_num() / q.get_den();
    Integer r;
    mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
    return r;
}

bool is_wall(const EquivariantSurface& S, const DivisorClass& xi, long M, const LexPolarization& Lm,
             const LexPolarization& Lp) {
    long x2 = S.intersect(xi, xi);
    if (x2 >= 0 || x2 < -M) return false;
    return lex_sign(S, xi, Lm) < 0 && lex_sign(S, xi, Lp) > 0;
}

std::vector<DivisorClass> box_search(const EquivariantSurface& S, const DivisorClass& c1, long M,
                                     const LexPolarization& Lm, const LexPolarization& Lp,
                                     const std::vector<long>& box) {
    const std::size_t n = S.rank();
    std::vector<DivisorClass> out;
    DivisorClass xi(n);
    auto start = [&](std::size_t i) {
        long lo = -box[i];
        // smallest value >= -box with the parity of c1
        if (((lo - c1[i]) % 2 + 2) % 2 != 0) ++lo;
        return lo;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (is_wall(S, xi, M, Lm, Lp)) out.push_back(xi);
            return;
        }
        for (long v = start(i); v <= box[i]; v += 2) {
            xi[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Box from the hyperbolic plane V spanned by the leading classes A0, B0.
// With u = xi.A0 <= 0 <= v = xi.B0 and -M <= xi^2 = xi_V^2 + xi_perp^2,
// c u^2 - 2b u v + a v^2 <= M Delta and -xi_perp^2 <= M.
std::optional<std::vector<long>> hyperbolic_box(const EquivariantSurface& S, long M, const DivisorClass& A0,
                                                const DivisorClass& B0) {
    const std::size_t n = S.rank();
    long a = S.intersect(A0, A0), c = S.intersect(B0, B0), b = S.intersect(A0, B0);
    long disc = b * b - a * c;
    if (disc <= 0 || b <= 0 || a < 0 || c < 0) return std::nullopt;
    Rational MD(M * disc);
    bool rank2 = n == 2;
    // bound on u^2
    Rational u2, v2;
    if (c > 0) u2 = MD / c;
    else if (rank2) u2 = (MD / (2 * b)) * (MD / (2 * b));  // v >= 1 since v = 0 forces xi^2 = 0
    else return std::nullopt;
    if (a > 0) v2 = MD / a;
    else if (rank2) v2 = (MD / (2 * b)) * (MD / (2 * b));
    else return std::nullopt;
    Rational qmax = Rational(M) + u2 + v2;

    const auto& I = S.intersection_matrix();
    std::vector<Rational> wa(n), wb(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            wa[i] += I[i][j] * A0[j];
            wb[i] += I[i][j] * B0[j];
        }
    Matrix gv = {{Rational(a), Rational(b)}, {Rational(b), Rational(c)}};
    Matrix gvi = invert_matrix(gv);
    gvi[0][0] += 1;
    gvi[1][1] += 1;
    Matrix G(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational w = wa[i] * (gvi[0][0] * wa[j] + gvi[0][1] * wb[j]) + wb[i] * (gvi[1][0] * wa[j] + gvi[1][1] * wb[j]);
            G[i][j] = w - I[i][j];
        }
    Matrix Gi = invert_matrix(G);
    std::vector<long> box(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (Gi[i][i] < 0) throw std::logic_error("wall bound: majorant is not positive definite");
        box[i] = isqrt_floor(qmax * Gi[i][i]).get_si();
    }
    return box;
}

}  // namespace

WallSearch search_walls(const EquivariantSurface& S, const DivisorClass& c1, long c2, const LexPolarization& Lminus,
                        const LexPolarization& Lplus) {
    const std::size_t n = S.rank();
    if (c1.size() != n) throw std::invalid_argument("c1 has wrong length");
    for (const auto* L : {&Lminus, &Lplus})
        for (const auto& l : L->levels)
            if (l.size() != n) throw std::invalid_argument("polarization has wrong length");
    long M = 4 * c2 - S.intersect(c1, c1);
    WallSearch ws;
    if (M <= 0) {
        ws.box.assign(n, 0);
        return ws;
    }
    auto hb = hyperbolic_box(S, M, Lminus.levels[0], Lplus.levels[0]);
    if (hb) {
        ws.box = *hb;
        ws.walls = box_search(S, c1, M, Lminus, Lplus, ws.box);
        return ws;
    }
    // no usable bound: grow the box until the result repeats
    ws.rigorous = false;
    long B = std::max<long>(4, M);
    auto prev = box_search(S, c1, M, Lminus, Lplus, std::vector<long>(n, B));
    for (int round = 0; round < 8; ++round) {
        auto next = box_search(S, c1, M, Lminus, Lplus, std::vector<long>(n, 2 * B));
        B *= 2;
        if (next == prev) break;
        prev = std::move(next);
    }
    ws.box.assign(n, B);
    ws.walls = std::move(prev);
    return ws;
}

std::vector<DivisorClass> enumerate_walls(const EquivariantSurface& S, const DivisorClass& c1, long c2,
                                          const LexPolarization& Lminus, const LexPolarization& Lplus) {
    return search_walls(S, c1, c2, Lminus, Lplus).walls;
}

std::vector<DivisorClass> closed_form_walls(ClosedFormModel model, const DivisorClass& c1, long c2,
                                            const std::optional<Rational>& delta) {
    if (c1.size() != 2) throw std::invalid_argument("unsupported (model, c1) pair");
    std::vector<DivisorClass> out;
    if (c2 < 0) return out;
    const bool hat = model == ClosedFormModel::HatP2;
    if (hat && delta && (*delta < 0 || *delta >= 1)) throw std::invalid_argument("delta must lie in [0,1)");
    if (!hat && delta && *delta <= 0) throw std::invalid_argument("delta must be positive");
    // only c1 mod 2 matters; 1 selects the odd coefficient 2a-1 (resp. 2b-1)
    const long half_a = ((c1[0] % 2) + 2) % 2, half_b = ((c1[1] % 2) + 2) % 2;
    const long lim = 4 * c2 + 8;
    for (long a = 1; a <= lim; ++a) {
        for (long b = 1; b <= lim; ++b) {
            Rational A(a), B(b);
            bool ok = false;
            if (hat) {
                // xi = (2a - c1_H) H - (2b - c1_E) E
                Rational d = delta ? *delta : Rational(0);
                Rational bb = half_b ? B - Rational(1, 2) : B;
                Rational lower = d * bb + (half_a ? Rational(1, 2) : Rational(0));
                bool order = (half_a && !half_b) ? b >= a : b > a;
                long lhs = (half_b ? b * (b - 1) : b * b) - (half_a ? a * (a - 1) : a * a);
                ok = order && A > lower && lhs <= c2;
                if (ok) out.push_back({2 * a - half_a, -(2 * b - half_b)});
            } else {
                // xi = (2a - c1_F) F - (2b - c1_G) G
                Rational aa = half_a ? A - Rational(1, 2) : A;
                bool slope = true;
                if (delta) slope = B < aa * *delta + (half_b ? Rational(1, 2) : Rational(0));
                long lhs;
                if (half_a && half_b) lhs = 2 * a * b - a - b + 1;  // xi^2 >= 2 - 4 c2
                else if (half_a) lhs = (2 * a - 1) * b;
                else if (half_b) lhs = (2 * b - 1) * a;
                else lhs = 2 * a * b;
                ok = slope && lhs <= c2;
                if (ok) out.push_back({2 * a - half_a, -(2 * b - half_b)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<LexPolarization, LexPolarization> closed_form_endpoints(ClosedFormModel model,
                                                                  const std::optional<Rational>& delta) {
    LexPolarization Lm, Lp;
    if (model == ClosedFormModel::HatP2) {
        Lm.levels = {{1, -1}, {0, 1}};  // F + eps E
        if (delta) {
            Rational d = *delta;
            Lp.levels = {{d.get_den().get_si(), -d.get_num().get_si()}};
        } else {
            Lp.levels = {{1, 0}, {0, -1}};  // H - eps E
        }
    } else {
        Lm.levels = {{1, 0}, {0, 1}};  // F + eps G
        if (delta) {
            Rational d = *delta;
            Lp.levels = {{d.get_den().get_si(), d.get_num().get_si()}};
        } else {
            Lp.levels = {{0, 1}, {1, 0}};  // G + eps F
        }
    }
    return {Lm, Lp};
}

}  // namespace dwc
