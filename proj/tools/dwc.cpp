// Command-line front end.

#include "dwc/blowup_polys.hpp"
#include "dwc/linsolve.hpp"
#include "dwc/pipelines.hpp"
#include "dwc/walls.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

using namespace dwc;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistentFit = 3;

struct Global {
    std::string format = "json";
    unsigned jobs = 1;
    std::string cache_path;
    bool no_cache = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string t;
    while (std::getline(ss, t, sep)) out.push_back(t);
    return out;
}

bool has_letter(const std::string& s) {
    for (char c : s)
        if (std::isalpha(static_cast<unsigned char>(c))) return true;
    return false;
}

// "2H-3E" or "2,-3"
DivisorClass class_arg(const EquivariantSurface& S, const std::string& text) {
    if (has_letter(text)) return parse_class(S, text);
    DivisorClass D;
    for (const auto& t : split(text, ',')) {
        try {
            std::size_t pos = 0;
            D.push_back(std::stol(t, &pos));
            if (pos != t.size()) throw std::invalid_argument(t);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("cannot parse class '" + text + "'");
        }
    }
    if (D.size() != S.rank())
        throw std::invalid_argument("class '" + text + "' needs " + std::to_string(S.rank()) + " coordinates");
    return D;
}

// levels separated by ';', each a class
LexPolarization polarization_arg(const EquivariantSurface& S, const std::string& text) {
    LexPolarization L;
    for (const auto& lv : split(text, ';')) L.levels.push_back(class_arg(S, lv));
    if (L.levels.empty()) throw std::invalid_argument("empty polarization");
    return L;
}

// "E,H^5" -> E, H, H, H, H, H
std::vector<DivisorClass> insertions_arg(const EquivariantSurface& S, const std::string& text) {
    std::vector<DivisorClass> out;
    if (text.empty()) return out;
    for (const auto& tok : split(text, ',')) {
        auto hat = tok.find('^');
        long n = 1;
        std::string cls = tok;
        if (hat != std::string::npos) {
            cls = tok.substr(0, hat);
            n = std::stol(tok.substr(hat + 1));
            if (n < 0) throw std::invalid_argument("negative repetition in '" + tok + "'");
        }
        DivisorClass D = parse_class(S, cls);
        for (long i = 0; i < n; ++i) out.push_back(D);
    }
    return out;
}

PointClassPair default_pair(const EquivariantSurface& S) {
    DivisorClass a(S.rank(), 0), b(S.rank(), 0);
    if (S.base() == BaseModel::P2) {
        a[0] = b[0] = 1;
    } else {
        a[0] = 1;
        b[1] = 1;
    }
    return {to_rational(a), to_rational(b)};
}

PointClassPair pair_arg(const EquivariantSurface& S, const std::string& text) {
    if (text.empty()) return default_pair(S);
    auto parts = split(text, ',');
    if (parts.size() != 2) throw std::invalid_argument("--pt needs two classes, e.g. H,H-E");
    PointClassPair pt{to_rational(parse_class(S, parts[0])), to_rational(parse_class(S, parts[1]))};
    if (S.intersect(pt.L1, pt.L2) != 1) throw std::invalid_argument("--pt classes must have intersection 1");
    return pt;
}

class Session {
public:
    explicit Session(const Global& g) : g_(g) {
        if (!g.no_cache) {
            std::string path = g.cache_path.empty() ? default_cache_path() : g.cache_path;
            cache_ = std::make_unique<ResultCache>(path);
            for (const auto& w : cache_->warnings()) std::cerr << "warning: " << w << "\n";
        }
        DeltaEngine::Options o;
        o.jobs = g.jobs;
        o.cache = cache_.get();
        engine_ = std::make_unique<DeltaEngine>(o);
        t0_ = std::chrono::steady_clock::now();
    }

    DeltaEngine& engine() { return *engine_; }
    bool table() const { return g_.format == "table"; }

    Json metadata(const Pipelines* pl = nullptr) const {
        Json m;
        auto st = engine_->stats();
        m["jobs"] = g_.jobs;
        m["subgroups"] = Json::array();
        for (const auto& s : st.subgroups) m["subgroups"].push_back(s);
        m["delta_evaluations"] = st.evaluations;
        Json c;
        c["enabled"] = cache_ != nullptr;
        if (cache_) {
            c["path"] = cache_->path();
            c["hits"] = cache_->hits();
            c["misses"] = cache_->misses();
        }
        m["cache"] = c;
        if (pl) {
            Json ws = Json::array();
            for (const auto& r : pl->crossings()) {
                Json w;
                w["surface"] = r.surface;
                w["c1"] = r.c1;
                w["c2"] = r.c2;
                w["from"] = r.from;
                w["to"] = r.to;
                w["rigorous_bound"] = r.rigorous;
                w["walls"] = Json::array();
                for (const auto& xi : r.walls) w["walls"].push_back(xi);
                ws.push_back(w);
            }
            m["wall_sets"] = ws;
        }
        m["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
        return m;
    }

private:
    Global g_;
    std::unique_ptr<ResultCache> cache_;
    std::unique_ptr<DeltaEngine> engine_;
    std::chrono::steady_clock::time_point t0_;
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string monomial(const InvariantPolynomial& p, long j) {
    std::string m;
    long ex = p.N - 2 * j;
    if (ex > 0) m += p.x + (ex > 1 ? "^" + std::to_string(ex) : "");
    if (j > 0) m += (m.empty() ? "" : "*") + p.y + (j > 1 ? "^" + std::to_string(j) : "");
    return m.empty() ? "1" : m;
}

Json invariant_json(const InvariantPolynomial& p) {
    Json j;
    j["N"] = p.N;
    j["basis"] = {p.x, p.y};
    j["polynomial"] = p.to_string();
    j["coefficients"] = Json::array();
    for (long k = 0; 2 * k <= p.N; ++k) {
        Json c;
        c["monomial"] = monomial(p, k);
        c["value"] = p.at(k).get_str();
        c["stable"] = p.unstable.count(k) == 0;
        j["coefficients"].push_back(c);
    }
    return j;
}

void print_invariant_table(const std::string& title, const InvariantPolynomial& p) {
    std::cout << title << " = " << p.to_string() << "\n";
    for (long k = 0; 2 * k <= p.N; ++k)
        std::cout << "  " << std::left << std::setw(12) << monomial(p, k) << std::right << std::setw(20)
                  << p.at(k).get_str() << (p.unstable.count(k) ? "   (outside the stable range)" : "") << "\n";
}

int cmd_walls(const Global& g, const std::string& surface, const std::string& c1s, long c2, const std::string& from,
              const std::string& to) {
    auto S = surface_from_lineage(surface);
    DivisorClass c1 = class_arg(S, c1s);
    auto Lm = polarization_arg(S, from), Lp = polarization_arg(S, to);
    auto ws = search_walls(S, c1, c2, Lm, Lp);
    const long N = 4 * c2 - S.intersect(c1, c1) - 3;
    if (!ws.rigorous) std::cerr << "warning: no rigorous search bound for these endpoints; box grown until stable\n";
    if (g.format == "table") {
        std::cout << "N = " << N << ", " << ws.walls.size() << " walls\n";
        for (const auto& xi : ws.walls) {
            auto w = wall_numbers(S, xi, N);
            std::cout << "  " << std::left << std::setw(16) << format_class(S, xi) << std::right << " d=" << w.d
                      << " e=" << w.e << "\n";
        }
        return 0;
    }
    Json out = Json::array();
    for (const auto& xi : ws.walls) {
        auto w = wall_numbers(S, xi, N);
        Json e;
        e["xi"] = xi;
        e["class"] = format_class(S, xi);
        e["d"] = w.d;
        e["e"] = w.e;
        out.push_back(e);
    }
    print_json(out);
    return 0;
}

struct DeltaArgs {
    std::string surface, xi, insertions, pt, x_class, subgroup;
    long N = 0;
    int r = 0;
    bool symbolic = false;
};

int cmd_delta(const Global& g, const DeltaArgs& a) {
    Session s(g);
    auto S = surface_from_lineage(a.surface);
    DivisorClass xi = class_arg(S, a.xi);
    auto ins = insertions_arg(S, a.insertions);
    auto pt = pair_arg(S, a.pt);
    auto w = wall_numbers(S, xi, a.N);
    std::optional<OneParamSubgroup> T;
    if (!a.subgroup.empty()) {
        DivisorClass t = class_arg(surface_from_lineage("p1xp1"), a.subgroup);
        T = OneParamSubgroup{t[0], t[1]};
    }
    Json out;
    std::string text;
    if (a.symbolic) {
        if (a.x_class.empty()) throw std::invalid_argument("--symbolic needs --x-class");
        RationalClass cx = to_rational(class_arg(S, a.x_class));
        std::vector<SymbolicClass> sym;
        for (const auto& D : ins) sym.push_back({to_rational(D), cx});
        Poly p = T ? s.engine().delta_symbolic_at(S, xi, a.N, sym, a.r, pt, *T)
                   : s.engine().delta_symbolic(S, xi, a.N, sym, a.r, pt);
        text = p.to_string();
        out["value"] = text;
        out["coefficients"] = Json::array();
        for (const auto& c : p.coeffs()) out["coefficients"].push_back(c.get_str());
    } else {
        std::vector<RationalClass> rins;
        for (const auto& D : ins) rins.push_back(to_rational(D));
        Rational v = T ? s.engine().delta_at(S, xi, a.N, rins, a.r, pt, *T) : s.engine().delta(S, xi, a.N, rins, a.r, pt);
        text = v.get_str();
        out["value"] = text;
    }
    out["d"] = w.d;
    out["e"] = w.e;
    out["metadata"] = s.metadata();
    if (s.table()) {
        std::cout << "delta(" << format_class(S, xi) << ", N=" << a.N << ", r=" << a.r << ") = " << text << "   [d=" << w.d
                  << ", e=" << w.e << "]\n";
        return 0;
    }
    print_json(out);
    return 0;
}

int cmd_blowup(const Global& g, const std::string& kind_s, int max_k, bool minimal) {
    BlowupKind kind;
    if (kind_s == "S") kind = BlowupKind::S;
    else if (kind_s == "B") kind = BlowupKind::B;
    else throw std::invalid_argument("--kind must be S or B");
    auto seeds = standard_seeds(kind);
    if (minimal && kind == BlowupKind::S) seeds.erase(7);
    auto t = generate_blowup_table(kind, seeds, max_k);
    for (const auto& w : t.warnings) std::cerr << "warning: " << w << "\n";
    if (g.format == "table") {
        for (int k = 0; k <= max_k; ++k)
            std::cout << kind_s << "_" << k << " = " << t.polys[static_cast<std::size_t>(k)].to_string() << "\n";
        return 0;
    }
    Json out = Json::array();
    for (const auto& p : t.polys) {
        Json c = Json::array();
        for (const auto& q : p.coeffs()) c.push_back(q.get_str());
        out.push_back(c);
    }
    print_json(out);
    return 0;
}

int cmd_invariants_p2(const Global& g, const std::string& type, long N) {
    Session s(g);
    Pipelines pl(s.engine());
    InvariantPolynomial p;
    std::string name;
    if (type == "su2") {
        p = pl.p2_su2(N);
        name = "A_" + std::to_string(N);
    } else if (type == "so3") {
        p = pl.p2_so3(N);
        name = "B_" + std::to_string(N);
    } else {
        throw std::invalid_argument("--type must be su2 or so3");
    }
    if (s.table()) {
        print_invariant_table(name, p);
        return 0;
    }
    Json full{{"surface", "p2"}, {"type", type}, {"name", name}};
    full.update(invariant_json(p));
    full["metadata"] = s.metadata(&pl);
    print_json(full);
    return 0;
}

int cmd_invariants_ruled(const Global& g, const std::string& model_s, const std::string& c1_s, long N) {
    Session s(g);
    Pipelines pl(s.engine());
    RuledModel model;
    if (model_s == "p1xp1") model = RuledModel::P1xP1;
    else if (model_s == "hat_p2" || model_s == "p2:b0") model = RuledModel::HatP2;
    else throw std::invalid_argument("--model must be p1xp1 or hat_p2");
    RuledC1 c1;
    if (c1_s == "0") c1 = RuledC1::Zero;
    else if (c1_s == "F") c1 = RuledC1::F;
    else throw std::invalid_argument("--c1 must be 0 or F");
    auto p = pl.ruled_invariant(model, c1, N);
    std::string name = (c1 == RuledC1::Zero ? "E_" : "Phi_F,") + std::to_string(N);
    if (s.table()) {
        print_invariant_table(name, p);
        return 0;
    }
    Json full{{"model", model_s}, {"c1", c1_s}, {"name", name}};
    full.update(invariant_json(p));
    full["metadata"] = s.metadata(&pl);
    print_json(full);
    return 0;
}

int cmd_fit(const Global& g, int k, int extra) {
    Session s(g);
    Pipelines pl(s.engine());
    FitResult f;
    try {
        f = pl.fit_Q(k, extra);
    } catch (const FitInconsistent& e) {
        std::cerr << "inconsistent fit: " << e.what() << "\n";
        return kExitInconsistentFit;
    } catch (const RankDeficient& e) {
        std::cerr << "underdetermined fit: rank " << e.rank() << "\n";
        return kExitInconsistentFit;
    }
    if (s.table()) {
        std::cout << "Q_" << k << " = " << f.Q.to_string() << "\n"
                  << "P_" << k << " = " << f.P.to_string() << "\n"
                  << "R_" << k << " = " << f.R.to_string() << "\n"
                  << f.equations << " equations, " << f.unknowns << " unknowns\n";
        return 0;
    }
    Json out;
    out["k"] = k;
    out["variables"] = f.Q.vars();
    out["Q"] = f.Q.to_string();
    out["P"] = f.P.to_string();
    out["R"] = f.R.to_string();
    out["equations"] = f.equations;
    out["unknowns"] = f.unknowns;
    out["points"] = Json::array();
    for (const auto& p : f.points)
        out["points"].push_back(
            {{"d", p.d}, {"w", p.w}, {"b", p.b}, {"r", p.r}, {"N", p.N}, {"K2", p.K2}, {"value", p.value.get_str()}});
    out["metadata"] = s.metadata();
    print_json(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact wall-crossing computations for Donaldson invariants"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--jobs", g.jobs, "worker threads (output does not depend on it)")->check(CLI::PositiveNumber);
    app.add_option("--cache", g.cache_path, "result cache file (default: $DWC_CACHE)");
    app.add_flag("--no-cache", g.no_cache, "disable the result cache");

    std::function<int()> action;

    auto* walls = app.add_subcommand("walls", "list the walls between two polarizations");
    std::string w_surface, w_c1, w_from, w_to;
    long w_c2 = 0;
    walls->add_option("--surface", w_surface, "surface lineage, e.g. p2:b0")->required();
    walls->add_option("--c1", w_c1, "first Chern class, e.g. 0,1 or E")->required();
    walls->add_option("--c2", w_c2, "second Chern class")->required();
    walls->add_option("--from", w_from, "start polarization, levels separated by ';'")->required();
    walls->add_option("--to", w_to, "end polarization")->required();
    walls->callback([&] { action = [&] { return cmd_walls(g, w_surface, w_c1, w_c2, w_from, w_to); }; });

    auto* delta = app.add_subcommand("delta", "wall-crossing term of one wall");
    DeltaArgs da;
    delta->add_option("--surface", da.surface, "surface lineage")->required();
    delta->add_option("--xi", da.xi, "wall class, e.g. 4,-5 or 4H-5E")->required();
    delta->add_option("--N", da.N, "N = 4c2 - c1^2 - 3")->required();
    delta->add_option("--insertions", da.insertions, "classes, e.g. E,H^5");
    delta->add_option("--r", da.r, "power of the point class")->check(CLI::NonNegativeNumber);
    delta->add_option("--pt", da.pt, "two classes with intersection 1 standing in for the point class");
    delta->add_option("--subgroup", da.subgroup, "one-parameter subgroup, e.g. 1,3");
    delta->add_flag("--symbolic", da.symbolic, "insertions become alpha + x*D with D from --x-class");
    delta->add_option("--x-class", da.x_class, "class multiplying x in symbolic mode");
    delta->callback([&] { action = [&] { return cmd_delta(g, da); }; });

    auto* blow = app.add_subcommand("blowup-poly", "universal blowup polynomials");
    std::string b_kind = "S";
    int b_max = 13;
    bool b_minimal = false;
    blow->add_option("--kind", b_kind, "S or B");
    blow->add_option("--max-k", b_max, "largest index")->check(CLI::NonNegativeNumber);
    blow->add_flag("--minimal-seeds", b_minimal, "S family from S1, S3 only");
    blow->callback([&] { action = [&] { return cmd_blowup(g, b_kind, b_max, b_minimal); }; });

    auto* inv = app.add_subcommand("invariants", "Donaldson invariants");
    inv->require_subcommand(1);
    auto* p2 = inv->add_subcommand("p2", "invariants of the projective plane");
    std::string p_type;
    long p_N = 0;
    p2->add_option("--type", p_type, "su2 or so3")->required();
    p2->add_option("--N", p_N, "degree")->required();
    p2->callback([&] { action = [&] { return cmd_invariants_p2(g, p_type, p_N); }; });
    auto* ruled = inv->add_subcommand("ruled", "invariants of the ruled surfaces");
    std::string r_model = "p1xp1", r_c1 = "0";
    long r_N = 0;
    ruled->add_option("--model", r_model, "p1xp1 or hat_p2");
    ruled->add_option("--c1", r_c1, "0 or F");
    ruled->add_option("--N", r_N, "degree")->required();
    ruled->callback([&] { action = [&] { return cmd_invariants_ruled(g, r_model, r_c1, r_N); }; });

    auto* fit = app.add_subcommand("fit-q", "fit the coefficient polynomial Q_k");
    int f_k = 0, f_extra = 1;
    fit->add_option("--k", f_k, "index")->required()->check(CLI::NonNegativeNumber);
    fit->add_option("--extra", f_extra, "grid layers beyond the minimal one")->check(CLI::NonNegativeNumber);
    fit->callback([&] { action = [&] { return cmd_fit(g, f_k, f_extra); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
