#include "dwc/pipelines.hpp"

#include "dwc/blowup_polys.hpp"
#include "dwc/linsolve.hpp"

#include <sstream>
#include <stdexcept>

namespace dwc {

namespace {

using Exponents = std::vector<int>;

// product of linear forms, as exponent vector -> coefficient
std::map<Exponents, Rational> expand(const std::vector<DivisorClass>& classes, std::size_t n) {
    std::map<Exponents, Rational> res{{Exponents(n, 0), Rational(1)}};
    for (const auto& c : classes) {
        std::map<Exponents, Rational> next;
        for (const auto& [e, v] : res) {
            for (std::size_t k = 0; k < n; ++k) {
                if (c[k] == 0) continue;
                Exponents e2 = e;
                ++e2[k];
                next[e2] += v * c[k];
            }
        }
        res.clear();
        for (auto& [e, v] : next)
            if (v != 0) res.emplace(e, v);
    }
    return res;
}

std::vector<RationalClass> repeat(const std::vector<std::pair<DivisorClass, long>>& parts) {
    std::vector<RationalClass> out;
    for (const auto& [c, n] : parts)
        for (long i = 0; i < n; ++i) out.push_back(to_rational(c));
    return out;
}

std::vector<RationalClass> to_rational(const std::vector<DivisorClass>& v) {
    std::vector<RationalClass> out;
    for (const auto& c : v) out.push_back(dwc::to_rational(c));
    return out;
}

// homogeneous forms of degree N in (a, b): index i holds the a^i b^(N-i) coefficient
using Form = std::vector<Rational>;

Form form_mul(const Form& f, const Form& g) {
    Form r(f.size() + g.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    }
    return r;
}

Form form_pow(const Form& f, long n) {
    Form r{Rational(1)};
    for (long i = 0; i < n; ++i) r = form_mul(r, f);
    return r;
}

const EquivariantSurface& hat_p2() {
    static const EquivariantSurface S = surface_from_lineage("p2:b0");
    return S;
}

const EquivariantSurface& p1xp1() {
    static const EquivariantSurface S = surface_from_lineage("p1xp1");
    return S;
}

// P1xP1 blown up at one fixpoint, basis (F, G, E)
const EquivariantSurface& p1xp1_b() {
    static const EquivariantSurface S = surface_from_lineage("p1xp1:b0");
    return S;
}

// F + eps E = H - (1 - eps) E, and H - eps E
const LexPolarization& HAT_FROM() {
    static const LexPolarization L{{{1, -1}, {0, 1}}};
    return L;
}
const LexPolarization& HAT_TO() {
    static const LexPolarization L{{{1, 0}, {0, -1}}};
    return L;
}
// F + eps G, and G + eps F
const LexPolarization& PP_FROM() {
    static const LexPolarization L{{{1, 0}, {0, 1}}};
    return L;
}
const LexPolarization& PP_TO() {
    static const LexPolarization L{{{0, 1}, {1, 0}}};
    return L;
}
// F + eps G - mu E, and F + eps G - (eps - mu) E, with mu << eps
const LexPolarization& H1() {
    static const LexPolarization L{{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
    return L;
}
const LexPolarization& H2() {
    static const LexPolarization L{{{1, 0, 0}, {0, 1, -1}, {0, 0, 1}}};
    return L;
}

std::string term_string(const Rational& c, const std::string& mono, bool first) {
    std::string s;
    Rational a = abs(c);
    if (first) s += sgn(c) < 0 ? "-" : "";
    else s += sgn(c) < 0 ? " - " : " + ";
    if (mono.empty()) s += a.get_str();
    else if (a == 1) s += mono;
    else s += a.get_str() + "*" + mono;
    return s;
}

}  // namespace

Rational InvariantPolynomial::at(long j) const {
    auto it = coeff.find(j);
    return it == coeff.end() ? Rational(0) : it->second;
}

std::string InvariantPolynomial::to_string() const {
    std::string s;
    bool first = true;
    for (const auto& [j, c] : coeff) {
        if (c == 0) continue;
        std::string mono;
        long ex = N - 2 * j;
        if (j > 0) mono += y + (j > 1 ? "^" + std::to_string(j) : "");
        if (ex > 0) mono += (mono.empty() ? "" : "*") + x + (ex > 1 ? "^" + std::to_string(ex) : "");
        s += term_string(c, mono, first);
        first = false;
    }
    return first ? "0" : s;
}

bool InvariantPolynomial::operator==(const InvariantPolynomial& o) const {
    if (N != o.N || x != o.x || y != o.y) return false;
    for (long j = 0; 2 * j <= N; ++j)
        if (at(j) != o.at(j)) return false;
    return true;
}

const WallSearch& Pipelines::walls(const EquivariantSurface& S, const DivisorClass& c1, long c2,
                                   const LexPolarization& Lm, const LexPolarization& Lp) {
    std::ostringstream key;
    key << S.lineage() << "|";
    for (long c : c1) key << c << ",";
    key << "|" << c2 << "|" << format_polarization(Lm) << "|" << format_polarization(Lp);
    auto it = wall_memo_.find(key.str());
    if (it != wall_memo_.end()) return it->second;
    WallSearch ws = search_walls(S, c1, c2, Lm, Lp);
    log_.push_back({S.lineage(), c1, c2, format_polarization(Lm), format_polarization(Lp), ws.walls, ws.rigorous});
    return wall_memo_.emplace(key.str(), std::move(ws)).first->second;
}

Rational Pipelines::crossing_sum(const EquivariantSurface& S, const DivisorClass& c1, long c2,
                                 const LexPolarization& Lminus, const LexPolarization& Lplus,
                                 const std::vector<RationalClass>& insertions, int r, const PointClassPair& pt) {
    for (const auto* L : {&Lminus, &Lplus})
        if (lex_sign(S, S.canonical(), *L) >= 0)
            throw std::invalid_argument("polarization " + format_polarization(*L) + " is not good (L.K >= 0)");
    const long N = 4 * c2 - S.intersect(c1, c1) - 3;
    const auto& ws = walls(S, c1, c2, Lminus, Lplus);
    Rational sum(0);
    for (const auto& xi : ws.walls) {
        WallNumbers wn = wall_numbers(S, xi, N);
        Rational v = eng_.delta(S, xi, N, insertions, r, pt);
        if (wn.e % 2 != 0) sum -= v;
        else sum += v;
    }
    if (recording_) calls_.push_back({S, c1, c2, Lminus, Lplus, insertions, r, pt, sum});
    return sum;
}

InvariantPolynomial Pipelines::p2_su2(long N) {
    if (N < 1 || N % 4 != 1) throw std::invalid_argument("SU(2) invariants of P2 need N = 1 mod 4");
    const auto& S = hat_p2();
    const long c2 = (N + 3) / 4;
    const DivisorClass H{1, 0}, E{0, 1};
    InvariantPolynomial out;
    out.N = N;
    for (long r = 0; 2 * r <= N; ++r) {
        auto ins = repeat({{E, 1}, {H, N - 2 * r}});
        Rational v = -crossing_sum(S, E, c2, HAT_FROM(), HAT_TO(), ins, static_cast<int>(r), {to_rational(H), to_rational(H)});
        if (v != 0) out.coeff[r] = v;
        if (4 * r > N - 5) out.unstable.insert(r);
    }
    return out;
}

InvariantPolynomial Pipelines::p2_so3(long N) {
    if (N < 0 || N % 4 != 0) throw std::invalid_argument("SO(3) invariants of P2 need N = 0 mod 4");
    const auto& S = hat_p2();
    const long c2 = (N + 4) / 4;
    const DivisorClass H{1, 0};
    InvariantPolynomial out;
    out.N = N;
    Rational scale = pow(Rational(2), static_cast<unsigned>(N));
    for (long r = 0; 2 * r <= N; ++r) {
        auto ins = repeat({{H, N - 2 * r}});
        Rational v = scale * crossing_sum(S, H, c2, HAT_FROM(), HAT_TO(), ins, static_cast<int>(r),
                                          {to_rational(H), to_rational(H)});
        if (v != 0) out.coeff[r] = v;
    }
    return out;
}

Rational Pipelines::phi_p2_H(long a, long k) {
    auto key = std::make_tuple(a, k, 0L);
    if (auto it = memo_p2_H_.find(key); it != memo_p2_H_.end()) return it->second;
    const long N = a + 2 * k;
    Rational v(0);
    if (N % 4 == 0) {
        const DivisorClass H{1, 0};
        v = crossing_sum(hat_p2(), H, (N + 4) / 4, HAT_FROM(), HAT_TO(), repeat({{H, a}}), static_cast<int>(k),
                         {to_rational(H), to_rational(H)});
    }
    memo_p2_H_[key] = v;
    return v;
}

Rational Pipelines::phi_pp_F(long a, long b, long k) {
    auto key = std::make_tuple(a, b, k);
    if (auto it = memo_pp_F_.find(key); it != memo_pp_F_.end()) return it->second;
    const long N = a + b + 2 * k;
    Rational v(0);
    if (N % 4 == 1) {
        const DivisorClass F{1, 0}, G{0, 1};
        v = crossing_sum(p1xp1(), F, (N + 3) / 4, PP_FROM(), PP_TO(), repeat({{F, a}, {G, b}}), static_cast<int>(k),
                         {to_rational(F), to_rational(G)});
    }
    memo_pp_F_[key] = v;
    return v;
}

Rational Pipelines::phi_p2h_F(long i, long a, long k) {
    auto key = std::make_tuple(i, a, k);
    if (auto it = memo_p2h_F_.find(key); it != memo_p2h_F_.end()) return it->second;
    const long N = i + a + 2 * k;
    Rational v(0);
    if (N % 4 == 1) {
        const DivisorClass H{1, 0}, E{0, 1}, F{1, -1};
        const Poly Si = s_poly(static_cast<int>(i));
        for (int kk = 0; kk <= Si.degree(); ++kk)
            if (Si.coeff(kk) != 0) v += Si.coeff(kk) * phi_p2_H(a, k + kk);
        v += crossing_sum(hat_p2(), F, (N + 3) / 4, HAT_FROM(), HAT_TO(), repeat({{E, i}, {H, a}}), static_cast<int>(k),
                          {to_rational(H), to_rational(H)});
    }
    memo_p2h_F_[key] = v;
    return v;
}

std::vector<Rational> Pipelines::ruled_coefficients(RuledModel model, RuledC1 c1, long N) {
    if (N < 1 || N % 4 != 1) throw std::invalid_argument("ruled invariants need N = 1 mod 4");
    std::vector<Rational> out(static_cast<std::size_t>(N) + 1);
    if (c1 == RuledC1::F) {
        for (long i = 0; i <= N; ++i)
            out[static_cast<std::size_t>(i)] = model == RuledModel::P1xP1 ? phi_pp_F(i, N - i, 0) : phi_p2h_F(N - i, i, 0);
        return out;
    }
    const auto& Pt = p1xp1_b();
    const long c2 = (N + 3) / 4;
    const DivisorClass F{1, 0, 0}, G{0, 1, 0}, E{0, 0, 1};
    const PointClassPair pt{to_rational(F), to_rational(G)};
    for (long i = 0; i <= N; ++i) {
        Rational val(0);
        if (model == RuledModel::HatP2) {
            // the blowup of hat P2 at a second point, seen as P1xP1 blown up once
            std::vector<DivisorClass> ins{{1, 0, -1}};
            for (long t = 0; t < i; ++t) ins.push_back(F);
            for (long t = i; t < N; ++t) ins.push_back({0, 1, -1});
            for (const auto& [e, v] : expand(ins, 3)) {
                const Poly Sk = s_poly(e[2]);
                for (int kk = 0; kk <= Sk.degree(); ++kk)
                    if (Sk.coeff(kk) != 0) val += v * Sk.coeff(kk) * phi_pp_F(e[0], e[1], kk);
            }
            val -= crossing_sum(Pt, {1, 0, -1}, c2, H2(), H1(), to_rational(ins), 0, pt);
        } else {
            // F, G, E of the blown-up P1xP1 in the basis (H, E1, E2) of P2 blown up twice
            std::vector<DivisorClass> insh{{1, -1, -1}};
            for (long t = 0; t < i; ++t) insh.push_back({1, -1, 0});
            for (long t = i; t < N; ++t) insh.push_back({1, 0, -1});
            for (const auto& [e, v] : expand(insh, 3)) {
                const Poly Sk = s_poly(e[2]);
                for (int kk = 0; kk <= Sk.degree(); ++kk)
                    if (Sk.coeff(kk) != 0) val += v * Sk.coeff(kk) * phi_p2h_F(e[1], e[0], kk);
            }
            std::vector<DivisorClass> ins{E};
            for (long t = 0; t < i; ++t) ins.push_back(F);
            for (long t = i; t < N; ++t) ins.push_back(G);
            val += crossing_sum(Pt, E, c2, H2(), H1(), to_rational(ins), 0, pt);
        }
        out[static_cast<std::size_t>(i)] = val;
    }
    return out;
}

InvariantPolynomial to_lq(RuledModel model, const std::vector<Rational>& form, long N) {
    if (static_cast<long>(form.size()) != N + 1) throw std::invalid_argument("form has wrong degree");
    const long J = N / 2;
    Matrix A(static_cast<std::size_t>(N) + 1, std::vector<Rational>(static_cast<std::size_t>(J) + 1));
    for (long j = 0; j <= J; ++j) {
        Form basis;
        if (model == RuledModel::P1xP1) {
            // L = b, q = 2ab
            basis.assign(static_cast<std::size_t>(N) + 1, Rational(0));
            basis[static_cast<std::size_t>(j)] = pow(Rational(2), static_cast<unsigned>(j));
        } else {
            // L = a + b, q = a^2 - b^2
            basis = form_mul(form_pow({Rational(1), Rational(1)}, N - j), form_pow({Rational(-1), Rational(1)}, j));
        }
        for (long i = 0; i <= N; ++i) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = basis[static_cast<std::size_t>(i)];
    }
    std::vector<Rational> sol;
    try {
        sol = solve_linear_system(A, form);
    } catch (const InconsistentSystem&) {
        throw std::runtime_error("basis conversion failed: result is not a polynomial in L_F and q");
    }
    InvariantPolynomial out;
    out.x = "L";
    out.y = "q";
    out.N = N;
    for (long j = 0; j <= J; ++j)
        if (sol[static_cast<std::size_t>(j)] != 0) out.coeff[j] = sol[static_cast<std::size_t>(j)];
    return out;
}

InvariantPolynomial Pipelines::ruled_invariant(RuledModel model, RuledC1 c1, long N) {
    auto c = ruled_coefficients(model, c1, N);
    Form form(static_cast<std::size_t>(N) + 1);
    if (model == RuledModel::HatP2 && c1 == RuledC1::Zero) {
        // alpha = aH + bE = aF + (a+b)E
        for (long i = 0; i <= N; ++i) {
            Form t = form_pow({Rational(1), Rational(1)}, N - i);  // (a+b)^(N-i)
            Form ai(static_cast<std::size_t>(i) + 1);
            ai[static_cast<std::size_t>(i)] = Rational(binomial(N, i)) * c[static_cast<std::size_t>(i)];
            Form p = form_mul(ai, t);
            for (long k = 0; k <= N; ++k) form[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k)];
        }
    } else {
        for (long i = 0; i <= N; ++i) form[static_cast<std::size_t>(i)] = Rational(binomial(N, i)) * c[static_cast<std::size_t>(i)];
    }
    return to_lq(model, form, N);
}

InvariantPolynomial halving_difference(const InvariantPolynomial& E) {
    InvariantPolynomial out = E;
    out.coeff.clear();
    out.unstable.clear();
    for (const auto& [j, c] : E.coeff) {
        Rational v = c * (1 - Rational(1) / pow(Rational(2), static_cast<unsigned>(E.N - 2 * j)));
        if (v != 0) out.coeff[j] = v;
    }
    return out;
}

MPoly leading_binomial_part(int k) {
    const std::vector<std::string> vars{"N", "d", "r", "K2"};
    auto var = [&](std::size_t i) { return MPoly::variable(vars, i); };
    auto cst = [&](const Rational& c) { return MPoly::constant(vars, c); };
    // X = -2d + 2N + 2K2 - 24r
    MPoly X = cst(0);
    X += var(1) * cst(-2);
    X += var(0) * cst(2);
    X += var(3) * cst(2);
    X += var(2) * cst(-24);
    auto binom = [&](const MPoly& a, int n) {
        if (n < 0) return cst(0);
        MPoly r = cst(1);
        for (int j = 0; j < n; ++j) r = r * (a - cst(j));
        r *= Rational(1) / Rational(factorial(n));
        return r;
    };
    MPoly P = binom(X + cst(make_rational(13 + 3 * k, 2)), k);
    MPoly lin = var(0) * cst(3) - var(2) * cst(288);
    P += lin * binom(X + cst(make_rational(7 + 3 * k, 2)), k - 2);
    return P;
}

FitResult Pipelines::fit_Q(int k, int extra) {
    if (k < 0 || extra < 0) throw std::invalid_argument("fit_Q: k and extra must be nonnegative");
    const std::vector<std::string> vars{"N", "d", "r", "K2"};
    const auto mons = monomials_up_to(4, k);
    FitResult res;
    res.k = k;
    res.unknowns = mons.size();
    const int top = 2 * k + extra;
    std::vector<EquivariantSurface> surf{surface_from_lineage("p1xp1"), surface_from_lineage("p1xp1:b0"),
                                         surface_from_lineage("p1xp1:b0:b2")};
    for (long d = k; d <= top; ++d) {
        for (long w = 0; w <= top - d; ++w) {
            for (long b = 0; b <= std::min<long>(2, top - d - w); ++b) {
                for (long r = 0; r <= top - d - w - b; ++r) {
                    const long s = w + 2, N = 4 * d + 2 * w + 1, M = N - 2 * r;
                    if (M - 2 * d + 2 * k < 0) continue;
                    const auto& S = surf[static_cast<std::size_t>(b)];
                    const std::size_t n = S.rank();
                    DivisorClass xi(n, 0), F(n, 0), G(n, 0);
                    xi[0] = 1;
                    xi[1] = -s;
                    F[0] = 1;
                    G[1] = 1;
                    RationalClass minusF = to_rational(F);
                    for (auto& c : minusF) c = -c;
                    std::vector<SymbolicClass> ins(static_cast<std::size_t>(M), SymbolicClass{to_rational(G), minusF});
                    Poly dv = eng_.delta_symbolic(S, xi, N, ins, static_cast<int>(r), {to_rational(F), to_rational(G)});

                    // dv = sum_kk a_kk L^(M-2d+2kk) q^(d-kk), L = (1+sx)/2, q = -2x
                    const Poly L(std::vector<Rational>{make_rational(1, 2), make_rational(s, 2)});
                    const Poly q(std::vector<Rational>{Rational(0), Rational(-2)});
                    std::vector<long> kks;
                    std::vector<Poly> basis;
                    for (long kk = 0; kk <= d; ++kk) {
                        long e = M - 2 * d + 2 * kk;
                        if (e < 0) continue;
                        Poly p(1);
                        for (long t = 0; t < e; ++t) p *= L;
                        for (long t = 0; t < d - kk; ++t) p *= q;
                        kks.push_back(kk);
                        basis.push_back(p);
                    }
                    Matrix A(static_cast<std::size_t>(M) + 1, std::vector<Rational>(basis.size()));
                    std::vector<Rational> rhs(static_cast<std::size_t>(M) + 1);
                    for (long i = 0; i <= M; ++i) {
                        rhs[static_cast<std::size_t>(i)] = dv.coeff(static_cast<int>(i));
                        for (std::size_t j = 0; j < basis.size(); ++j)
                            A[static_cast<std::size_t>(i)][j] = basis[j].coeff(static_cast<int>(i));
                    }
                    if (dv.degree() > M) throw std::logic_error("symbolic delta has too high a degree");
                    std::vector<Rational> a;
                    try {
                        a = solve_linear_system(A, rhs);
                    } catch (const InconsistentSystem&) {
                        throw FitInconsistent("delta is not in the span of L^i q^j at d=" + std::to_string(d) +
                                                 " w=" + std::to_string(w) + " b=" + std::to_string(b) +
                                                 " r=" + std::to_string(r));
                    }
                    Rational ak(0);
                    for (std::size_t j = 0; j < kks.size(); ++j)
                        if (kks[j] == k) ak = a[j];
                    Rational val = ak * pow(Rational(-4), static_cast<unsigned>(r)) *
                                   Rational(factorial(M - 2 * d + 2 * k) * factorial(d - k)) / Rational(factorial(M));
                    res.points.push_back({d, w, b, r, N, 8 - b, val});
                }
            }
        }
    }
    Matrix A;
    std::vector<Rational> rhs;
    for (const auto& p : res.points) {
        std::vector<Rational> row;
        for (const auto& m : mons) {
            Rational v = pow(Rational(p.N), m[0]) * pow(Rational(p.d), m[1]) * pow(Rational(p.r), m[2]) *
                         pow(Rational(p.K2), m[3]);
            row.push_back(v);
        }
        A.push_back(row);
        rhs.push_back(p.value);
    }
    res.equations = A.size();
    std::vector<Rational> sol;
    try {
        sol = solve_linear_system(A, rhs);
    } catch (const InconsistentSystem& e) {
        if (e.row() >= res.points.size()) throw FitInconsistent(e.what());
        const auto& p = res.points[e.row()];
        throw FitInconsistent("no polynomial of degree " + std::to_string(k) + " fits the point d=" + std::to_string(p.d) +
                              " w=" + std::to_string(p.w) + " b=" + std::to_string(p.b) + " r=" + std::to_string(p.r));
    }
    res.Q = MPoly(vars);
    for (std::size_t i = 0; i < mons.size(); ++i) res.Q.add_term(mons[i], sol[i]);
    res.P = leading_binomial_part(k);
    res.R = res.Q - res.P;
    return res;
}

}  // namespace dwc
