// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria not declared with --known-failure,
// plus the number of declared ones that unexpectedly pass.

#include "oracles.hpp"

#include "dwc/blowup_polys.hpp"
#include "dwc/hilbert.hpp"
#include "dwc/linsolve.hpp"
#include "dwc/pipelines.hpp"
#include "dwc/walls.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace dwc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Rational R(long n, long d = 1) { return make_rational(n, d); }

Poly P(std::vector<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(v);
}

InvariantPolynomial inv(long N, std::map<long, Rational> c, const char* x = "h", const char* y = "p") {
    InvariantPolynomial p;
    p.N = N;
    p.x = x;
    p.y = y;
    p.coeff = std::move(c);
    return p;
}

// compares and appends a short note
void expect_poly(Outcome& o, const std::string& name, const InvariantPolynomial& got, const InvariantPolynomial& want) {
    if (got == want) {
        o.detail += name + " ok; ";
    } else {
        o.pass = false;
        o.detail += name + " MISMATCH got " + got.to_string() + " want " + want.to_string() + "; ";
    }
}

Outcome blowup_criterion() {
    Outcome o;
    std::map<int, Poly> seeds{{1, P({1})}, {3, P({0, -1})}};
    auto t5 = generate_blowup_table(BlowupKind::S, seeds, 5);
    if (t5.polys[5] == P({2, 0, 1})) {
        o.detail += "S5 = " + t5.polys[5].to_string() + " regenerated; ";
    } else {
        o.pass = false;
        o.detail += "S5 wrong: " + t5.polys[5].to_string() + "; ";
    }
    try {
        auto t7 = generate_blowup_table(BlowupKind::S, seeds, 7);
        if (t7.polys[7] == P({0, -6, 0, -1})) {
            o.detail += "S7 regenerated; ";
        } else {
            o.pass = false;
            o.detail += "S7 wrong: " + t7.polys[7].to_string() + "; ";
        }
    } catch (const UndeterminedPolynomial& e) {
        o.pass = false;
        o.detail += "S7 NOT regenerated: " + std::string(e.what()) +
                    "; every later relation adds a new unknown, so S7 is a free parameter; ";
    }
    auto tb = generate_blowup_table(BlowupKind::B, standard_seeds(BlowupKind::B), 13);
    bool ok = true;
    for (int h = 0; h <= 9; ++h) ok = ok && recursion_residual(tb.polys, h).is_zero();
    o.pass = o.pass && ok;
    o.detail += std::string("B table ") + (ok ? "satisfies" : "VIOLATES") + " the recursion for h <= 9 (B6 = " +
                tb.polys[6].to_string() + ", B8 = " + tb.polys[8].to_string() + ")";
    return o;
}

Outcome wall_criterion() {
    Outcome o;
    std::size_t checked = 0, walls = 0;
    const std::vector<std::pair<ClosedFormModel, std::optional<Rational>>> ends{
        {ClosedFormModel::HatP2, std::nullopt}, {ClosedFormModel::HatP2, R(1, 2)}, {ClosedFormModel::HatP2, R(1, 3)},
        {ClosedFormModel::P1xP1, std::nullopt}, {ClosedFormModel::P1xP1, R(1)},    {ClosedFormModel::P1xP1, R(3, 2)}};
    for (const auto& [model, delta] : ends) {
        auto S = surface_from_lineage(model == ClosedFormModel::HatP2 ? "p2:b0" : "p1xp1");
        auto [Lm, Lp] = closed_form_endpoints(model, delta);
        for (long a = 0; a < 2; ++a)
            for (long b = 0; b < 2; ++b)
                for (long c2 = 0; c2 <= 6; ++c2) {
                    auto got = enumerate_walls(S, {a, b}, c2, Lm, Lp);
                    auto want = closed_form_walls(model, {a, b}, c2, delta);
                    ++checked;
                    walls += got.size();
                    if (got != want) {
                        o.pass = false;
                        o.detail += "mismatch model " + std::to_string(static_cast<int>(model)) + " c1=(" +
                                    std::to_string(a) + "," + std::to_string(b) + ") c2=" + std::to_string(c2) + "; ";
                    }
                }
    }
    o.detail += std::to_string(checked) + " (model, c1, c2, endpoint) cases, " + std::to_string(walls) + " walls";
    return o;
}

Outcome su2_criterion(Pipelines& pl, bool extended) {
    Outcome o;
    expect_poly(o, "A1", pl.p2_su2(1), inv(1, {{0, R(-3, 2)}}));
    expect_poly(o, "A5", pl.p2_su2(5), inv(5, {{0, R(1)}, {1, R(-1)}, {2, R(-13, 8)}}));
    expect_poly(o, "A9", pl.p2_su2(9),
                inv(9, {{0, R(3)}, {1, R(15, 4)}, {2, R(-11, 16)}, {3, R(-141, 64)}, {4, R(-879, 256)}}));
    expect_poly(o, "A13", pl.p2_su2(13),
                inv(13, {{0, R(54)},
                         {1, R(24)},
                         {2, R(159, 8)},
                         {3, R(51, 16)},
                         {4, R(-459, 128)},
                         {5, R(-1515, 256)},
                         {6, R(-36675, 4096)}}));
    if (extended)
        expect_poly(o, "A17", pl.p2_su2(17),
                    inv(17, {{0, R(2540)},
                             {1, R(694)},
                             {2, R(487, 2)},
                             {3, R(2251, 16)},
                             {4, R(2711, 64)},
                             {5, R(-5, 16)},
                             {6, R(-3355, 256)},
                             {7, R(-143725, 8192)},
                             {8, R(-850265, 32768)}}));
    return o;
}

Outcome so3_criterion(Pipelines& pl) {
    Outcome o;
    expect_poly(o, "B0", pl.p2_so3(0), inv(0, {{0, R(1)}}));
    expect_poly(o, "B4", pl.p2_so3(4), inv(4, {{0, R(3)}, {1, R(5)}, {2, R(19)}}));
    expect_poly(o, "B8", pl.p2_so3(8), inv(8, {{0, R(232)}, {1, R(152)}, {2, R(136)}, {3, R(184)}, {4, R(680)}}));
    expect_poly(o, "B12", pl.p2_so3(12),
                inv(12, {{0, R(69525)},
                         {1, R(26907)},
                         {2, R(12853)},
                         {3, R(7803)},
                         {4, R(6357)},
                         {5, R(8155)},
                         {6, R(29557)}}));
    return o;
}

Outcome ruled_criterion(Pipelines& pl) {
    Outcome o;
    const auto E5 = inv(5, {{0, R(-1)}, {1, R(5, 2)}, {2, R(-5, 2)}}, "L", "q");
    const auto E9 = inv(9, {{0, R(40)}, {1, R(-108)}, {2, R(108)}, {3, R(-42)}}, "L", "q");
    for (auto m : {RuledModel::P1xP1, RuledModel::HatP2}) {
        std::string tag = m == RuledModel::P1xP1 ? "p1xp1" : "hat_p2";
        for (const auto* E : {&E5, &E9}) {
            std::string n = std::to_string(E->N);
            expect_poly(o, "E" + n + "(" + tag + ")", pl.ruled_invariant(m, RuledC1::Zero, E->N), *E);
            expect_poly(o, "Phi_F," + n + "(" + tag + ")", pl.ruled_invariant(m, RuledC1::F, E->N), halving_difference(*E));
        }
    }
    return o;
}

Outcome fit_criterion(Pipelines& pl) {
    Outcome o;
    for (int k = 0; k <= 2; ++k) {
        FitResult f;
        try {
            f = pl.fit_Q(k);
        } catch (const FitInconsistent& e) {
            o.pass = false;
            o.detail += "k=" + std::to_string(k) + " INCONSISTENT (" + e.what() + "); ";
            continue;
        }
        MPoly want(f.R.vars());
        if (k == 2) want = MPoly::constant(f.R.vars(), R(69, 8));
        bool ok = f.R == want && f.equations > f.unknowns;
        o.pass = o.pass && ok;
        o.detail += "R" + std::to_string(k) + " = " + f.R.to_string() + " (" + std::to_string(f.equations) + " eq / " +
                    std::to_string(f.unknowns) + " unknowns)" + (ok ? "" : " WRONG") + "; ";
    }
    return o;
}

std::string swapped_lineage(const std::string& l) {
    std::string out;
    std::stringstream ss(l);
    std::string t;
    bool first = true;
    while (std::getline(ss, t, ':')) {
        if (!first) out += ":";
        if (!first && t[0] == 'b') t = t.back() == 's' ? t.substr(0, t.size() - 1) : t + "s";
        out += t;
        first = false;
    }
    return out;
}

// a second point-class pair for the same surface, when one is easy to find
std::optional<PointClassPair> alternative_pair(const EquivariantSurface& S, const PointClassPair& pt) {
    if (S.intersect(pt.L1, pt.L1) == 0) {
        RationalClass L2 = pt.L2;
        for (std::size_t i = 0; i < L2.size(); ++i) L2[i] += pt.L1[i];
        return PointClassPair{pt.L1, L2};
    }
    for (std::size_t e = 0; e < S.rank(); ++e) {
        if (S.basis_names()[e][0] != 'E') continue;
        RationalClass E(S.rank(), Rational(0));
        E[e] = 1;
        if (S.intersect(pt.L1, E) != 0) continue;
        RationalClass L2 = pt.L2;
        for (std::size_t i = 0; i < L2.size(); ++i) L2[i] -= E[i];
        if (S.intersect(pt.L1, L2) == 1) return PointClassPair{pt.L1, L2};
    }
    return std::nullopt;
}

Outcome property_criterion(Pipelines& pl) {
    Outcome o;
    DeltaEngine& eng = pl.engine();
    std::size_t n_T = 0, n_d0 = 0, n_pt = 0, n_relabel = 0;
    std::vector<std::string> bad;
    std::set<std::string> seen;
    for (const auto& call : pl.calls()) {
        const auto& S = call.surface;
        const long N = 4 * call.c2 - S.intersect(call.c1, call.c1) - 3;
        auto walls = enumerate_walls(S, call.c1, call.c2, call.from, call.to);
        std::vector<std::size_t> perm(S.num_fixpoints());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
        auto Rl = relabel_fixpoints(S, perm);
        auto Sw = surface_from_lineage(swapped_lineage(S.lineage()));
        auto alt = alternative_pair(S, call.pt);
        for (const auto& xi : walls) {
            std::string key = delta_cache_key(S, xi, N, {}, call.r, call.pt, false);
            for (const auto& a : call.insertions)
                for (const auto& c : a) key += "," + c.get_str();
            if (!seen.insert(key).second) continue;
            const int d = static_cast<int>(wall_numbers(S, xi, N).d);
            const Rational ref = eng.delta(S, xi, N, call.insertions, call.r, call.pt);
            for (const auto& T : eng.generic_subgroups(S, d, 3)) {
                ++n_T;
                if (eng.delta_at(S, xi, N, call.insertions, call.r, call.pt, T) != ref) bad.push_back("T " + key);
            }
            if (d == 0) {
                ++n_d0;
                if (oracle::delta_d0(S, xi, call.insertions, call.r) != ref) bad.push_back("d0 " + key);
            }
            if (call.r >= 1 && alt) {
                ++n_pt;
                if (eng.delta(S, xi, N, call.insertions, call.r, *alt) != ref) bad.push_back("pt " + key);
            }
            n_relabel += 2;
            if (eng.delta(Rl, xi, N, call.insertions, call.r, call.pt) != ref) bad.push_back("relabel " + key);
            if (eng.delta(Sw, xi, N, call.insertions, call.r, call.pt) != ref) bad.push_back("swap " + key);
        }
    }
    if (n_T == 0 || n_pt == 0) bad.push_back("no calls recorded");

    // tangent factor count
    std::mt19937 rng(20261016);
    std::size_t n_tan = 0;
    for (const char* l : {"p2", "p2:b0", "p1xp1:b0:b2"}) {
        auto S = surface_from_lineage(l);
        for (int trial = 0; trial < 200; ++trial) {
            int d = 1 + static_cast<int>(rng() % 6);
            auto cs = eng.configs(S.num_fixpoints(), d);
            FixConfig c = cs->config(rng() % cs->size());
            std::size_t count = 0;
            for (std::size_t i = 0; i < S.num_fixpoints(); ++i)
                count += ext_terms(c.P[i], c.P[i]).size() + ext_terms(c.Q[i], c.Q[i]).size();
            ++n_tan;
            if (count != static_cast<std::size_t>(2 * d)) bad.push_back("tangent count");
            try {
                tangent_factors(c, S, eng.pick_generic_T(S, d));
            } catch (const NonGenericSubgroup&) {
                bad.push_back("non-generic T accepted");
            }
        }
    }
    // partition and configuration counts
    std::size_t n_cfg = 0;
    auto gp = oracle::partition_series(6);
    for (int n = 0; n <= 6; ++n)
        if (Integer(static_cast<unsigned long>(partitions(n).size())) != gp[static_cast<std::size_t>(n)])
            bad.push_back("partition count");
    for (std::size_t m = 1; m <= 6; ++m) {
        auto gf = oracle::partition_series(6, static_cast<int>(2 * m));
        for (int d = 0; d <= 6; ++d) {
            ++n_cfg;
            if (Integer(static_cast<unsigned long>(ConfigSet(m, d).size())) != gf[static_cast<std::size_t>(d)])
                bad.push_back("config count m=" + std::to_string(m) + " d=" + std::to_string(d));
        }
    }
    // Ext oracle
    std::size_t n_ext = 0;
    std::vector<Partition> ps;
    for (int n = 0; n <= 3; ++n)
        for (auto& p : partitions(n)) ps.push_back(p);
    for (const auto& A : ps)
        for (const auto& B : ps) {
            oracle::Character2 mine;
            for (const auto& w : ext_terms(A, B)) mine[{w.cx, w.cy}] += 1;
            ++n_ext;
            if (mine != oracle::ext_character(B, A)) bad.push_back("ext " + A.to_string() + " " + B.to_string());
        }

    o.pass = bad.empty();
    o.detail = "T-independence " + std::to_string(n_T) + " evaluations; d=0 oracle " + std::to_string(n_d0) +
               " walls; point pair " + std::to_string(n_pt) + "; relabel/chart order " + std::to_string(n_relabel) +
               "; tangent count " + std::to_string(n_tan) + " configs; config counts " + std::to_string(n_cfg) +
               "; Ext oracle " + std::to_string(n_ext) + " pairs";
    if (!bad.empty()) o.detail += "; " + std::to_string(bad.size()) + " violations, first: " + bad.front();
    return o;
}

// levelwise sum of the two endpoints, a polarization strictly between them in the lexicographic sense
LexPolarization midpoint(const LexPolarization& a, const LexPolarization& b) {
    LexPolarization m;
    std::size_t n = std::max(a.levels.size(), b.levels.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = i < a.levels.size() ? a.levels[i] : a.levels.back();
        const auto& y = i < b.levels.size() ? b.levels[i] : b.levels.back();
        DivisorClass s(x.size());
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = x[k] + y[k];
        m.levels.push_back(s);
    }
    return m;
}

Outcome structure_criterion(Pipelines& pl) {
    Outcome o;
    pl.set_recording(false);
    const auto calls = pl.calls();
    std::size_t n_rev = 0, n_path = 0, skipped = 0;
    std::vector<std::string> bad;
    std::set<std::string> seen;
    for (const auto& c : calls) {
        const auto& S = c.surface;
        std::string key = S.lineage() + "|" + format_polarization(c.from) + "|" + format_polarization(c.to) + "|" +
                          std::to_string(c.c2) + "|" + std::to_string(c.r);
        for (const auto& a : c.insertions)
            for (const auto& x : a) key += "," + x.get_str();
        if (!seen.insert(key).second) continue;
        ++n_rev;
        Rational back = pl.crossing_sum(S, c.c1, c.c2, c.to, c.from, c.insertions, c.r, c.pt);
        if (back != -c.value) bad.push_back("reversal " + key);
        LexPolarization mid = midpoint(c.from, c.to);
        bool usable = lex_sign(S, S.canonical(), mid) < 0;
        for (const auto& xi : enumerate_walls(S, c.c1, c.c2, c.from, c.to))
            if (lex_sign(S, xi, mid) == 0) usable = false;
        if (!usable) {
            ++skipped;
            continue;
        }
        ++n_path;
        Rational a = pl.crossing_sum(S, c.c1, c.c2, c.from, mid, c.insertions, c.r, c.pt);
        Rational b = pl.crossing_sum(S, c.c1, c.c2, mid, c.to, c.insertions, c.r, c.pt);
        if (a + b != c.value) bad.push_back("additivity " + key);
    }
    o.pass = bad.empty() && n_path > 0;
    o.detail = "reversal antisymmetry on " + std::to_string(n_rev) + " crossing sums; path additivity on " +
               std::to_string(n_path) + " (" + std::to_string(skipped) + " without a usable midpoint)";
    if (!bad.empty()) o.detail += "; " + std::to_string(bad.size()) + " violations, first: " + bad.front();
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    unsigned jobs = 1;
    bool extended = false;
    std::vector<int> known, only;
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--extended", extended, "also reproduce A17");
    app.add_option("--known-failure", known, "criteria expected to fail; reported, not counted")->delimiter(',');
    app.add_option("--only", only, "run only these criteria")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    DeltaEngine::Options opt;
    opt.jobs = jobs;
    DeltaEngine eng(opt);
    Pipelines pl(eng);
    pl.set_recording(true);

    int failed = 0;
    auto listed = [](const std::vector<int>& v, int id) { return std::find(v.begin(), v.end(), id) != v.end(); };
    auto run = [&](int id, const std::string& title, const std::function<Outcome()>& f) {
        if (!only.empty() && !listed(only, id)) return;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = f();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
        const bool expected_red = listed(known, id);
        if (o.pass == expected_red) ++failed;
        std::ostringstream t;
        t.precision(2);
        t << std::fixed << secs;
        std::cout << (o.pass ? "PASS" : "FAIL") << (expected_red ? (o.pass ? " (declared known failure, now passing)" : " (known)") : "")
                  << " [" << id << "] " << title << " (" << t.str() << " s): " << o.detail
                  << std::endl;
    };

    run(1, "blowup polynomials", blowup_criterion);
    run(2, "wall oracle", wall_criterion);
    run(3, "SU(2) invariants of P2", [&] { return su2_criterion(pl, extended); });
    run(4, "SO(3) invariants of P2", [&] { return so3_criterion(pl); });
    run(5, "ruled surfaces", [&] { return ruled_criterion(pl); });
    pl.set_recording(false);
    run(6, "coefficient fit", [&] { return fit_criterion(pl); });
    run(7, "property suites", [&] { return property_criterion(pl); });
    run(8, "structural checks on pipeline crossings", [&] { return structure_criterion(pl); });
    return failed;
}
