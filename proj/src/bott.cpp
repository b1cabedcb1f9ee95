#include "dwc/bott.hpp"

#include "dwc/walls.hpp"

#include <chrono>
#include <exception>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace dwc {

namespace {

template <typename C>
C linear(const Rational& a, const Rational& b);

template <>
Rational linear<Rational>(const Rational& a, const Rational& b) {
    if (b != 0) throw std::invalid_argument("symbolic insertion passed to a rational evaluation");
    return a;
}

template <>
Poly linear<Poly>(const Rational& a, const Rational& b) {
    return Poly(std::vector<Rational>{a, b});
}

template <typename C>
C scaled(const C& c, const Rational& s) {
    C r = c;
    r *= s;
    return r;
}

std::string class_key(const RationalClass& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].get_str();
    return s;
}

bool is_zero_class(const RationalClass& c) {
    for (const auto& q : c)
        if (q != 0) return false;
    return true;
}

std::string subgroup_key(const OneParamSubgroup& T) { return std::to_string(T.wl) + "," + std::to_string(T.wm); }

std::vector<SymbolicClass> lift(const std::vector<RationalClass>& ins) {
    std::vector<SymbolicClass> out;
    out.reserve(ins.size());
    for (const auto& c : ins) out.push_back({c, RationalClass(c.size())});
    return out;
}

void check_inputs(const EquivariantSurface& S, long N, const std::vector<SymbolicClass>& ins, int r,
                  const PointClassPair& pt) {
    if (r < 0) throw std::invalid_argument("negative number of point insertions");
    if (static_cast<long>(ins.size()) != N - 2 * r)
        throw std::invalid_argument("expected " + std::to_string(N - 2 * r) + " divisor insertions, got " +
                                    std::to_string(ins.size()));
    for (const auto& c : ins)
        if (c.c.size() != S.rank() || c.cx.size() != S.rank()) throw std::invalid_argument("insertion has wrong length");
    if (r > 0) {
        if (pt.L1.size() != S.rank() || pt.L2.size() != S.rank()) throw std::invalid_argument("point pair has wrong length");
        if (S.intersect(pt.L1, pt.L2) != 1) throw std::invalid_argument("point pair must satisfy <L1.L2> = 1");
    }
}

// distinct tangent weight terms over all partitions of size <= d
std::set<WeightTerm> tangent_terms(int d) {
    std::set<WeightTerm> out;
    for (int n = 1; n <= d; ++n)
        for (const auto& p : partitions(n))
            for (const auto& t : ext_terms(p, p)) out.insert(t);
    return out;
}

}  // namespace

std::string delta_cache_key(const EquivariantSurface& S, const DivisorClass& xi, long N,
                            const std::vector<SymbolicClass>& insertions, int r, const PointClassPair& pt,
                            bool symbolic) {
    std::vector<std::string> ins;
    for (const auto& c : insertions)
        ins.push_back(is_zero_class(c.cx) ? class_key(c.c) : class_key(c.c) + "|" + class_key(c.cx));
    std::sort(ins.begin(), ins.end());
    std::string key = symbolic ? "sdelta" : "delta";
    key += " S=" + S.lineage() + " xi=";
    for (std::size_t i = 0; i < xi.size(); ++i) key += (i ? "," : "") + std::to_string(xi[i]);
    key += " N=" + std::to_string(N) + " r=" + std::to_string(r) + " ins=";
    for (std::size_t i = 0; i < ins.size(); ++i) key += (i ? ";" : "") + ins[i];
    key += " pt=" + (r > 0 ? class_key(pt.L1) + ";" + class_key(pt.L2) : std::string("-"));
    return key;
}

DeltaEngine::DeltaEngine() : DeltaEngine(Options{}) {}

DeltaEngine::DeltaEngine(Options opt) : opt_(opt) {
    if (opt_.jobs == 0) opt_.jobs = 1;
}

std::shared_ptr<const ConfigSet> DeltaEngine::configs(std::size_t m, int d) const {
    std::lock_guard<std::mutex> g(mu_);
    auto& slot = configs_[{m, d}];
    if (!slot) slot = std::make_shared<const ConfigSet>(m, d);
    return slot;
}

bool DeltaEngine::is_generic(const EquivariantSurface& S, int d, const OneParamSubgroup& T) const {
    if (T.wl == 0 && T.wm == 0) return false;
    auto terms = tangent_terms(d);
    for (const auto& p : S.fixpoints()) {
        long u = specialize(p.wx, T), v = specialize(p.wy, T);
        for (const auto& t : terms)
            if (t.cx * u + t.cy * v == 0) return false;
    }
    return true;
}

OneParamSubgroup DeltaEngine::pick_generic_T(const EquivariantSurface& S, int d) const {
    for (long q = 2;; ++q) {
        OneParamSubgroup T{1, q};
        if (is_generic(S, d, T)) return T;
    }
}

std::vector<OneParamSubgroup> DeltaEngine::generic_subgroups(const EquivariantSurface& S, int d,
                                                             std::size_t count) const {
    std::vector<OneParamSubgroup> out;
    for (long s = 3; out.size() < count; ++s) {
        for (long p = 1; p < s && out.size() < count; ++p) {
            long q = s - p;
            if (std::gcd(p, q) != 1) continue;
            OneParamSubgroup T{p, q};
            if (is_generic(S, d, T)) out.push_back(T);
        }
    }
    return out;
}

DeltaStats DeltaEngine::stats() const {
    DeltaStats s;
    s.evaluations = evaluations_.load();
    s.cache_hits = cache_hits_.load();
    s.configs_summed = configs_summed_.load();
    std::lock_guard<std::mutex> g(mu_);
    s.subgroups = subgroups_;
    return s;
}

template <typename C>
C DeltaEngine::evaluate(const EquivariantSurface& S, const DivisorClass& xi, long N,
                        const std::vector<SymbolicClass>& ins, int r, const PointClassPair& pt,
                        const OneParamSubgroup& T) {
    check_inputs(S, N, ins, r, pt);
    const int d = static_cast<int>(wall_numbers(S, xi, N).d);
    const int order = 2 * d;
    const std::size_t m = S.num_fixpoints();
    auto cs = configs(m, d);
    const auto& table = cs->table();
    const std::size_t np = table.size();

    std::vector<long> u(m), v(m), wxi(m), wk(m);
    for (std::size_t i = 0; i < m; ++i) {
        u[i] = specialize(S.fixpoints()[i].wx, T);
        v[i] = specialize(S.fixpoints()[i].wy, T);
        wxi[i] = specialize(S.bundle_weight(xi, i), T);
        wk[i] = specialize(S.bundle_weight(S.canonical(), i), T);
    }

    // tangent weight product per fixpoint and partition
    std::vector<Integer> tang(m * np);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t p = 0; p < np; ++p) {
            Integer prod(1);
            for (const auto& t : ext_terms(table[p], table[p])) {
                long f = t.cx * u[i] + t.cy * v[i];
                if (f == 0) throw NonGenericSubgroup();
                prod *= f;
            }
            tang[i * np + p] = prod;
        }
    }

    // power sums of the negated Chern roots of the two V-summands, per (i, P, Q)
    std::vector<std::vector<Integer>> psum(m * np * np);
    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t q = 0; q < np; ++q) {
            if (table[p].size() + table[q].size() > d) continue;
            auto terms = ext_terms(table[p], table[q]);
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<Integer> ps(static_cast<std::size_t>(order) + 1);
                for (const auto& t : terms) {
                    long base = t.cx * u[i] + t.cy * v[i];
                    for (long shift : {-wxi[i], -wxi[i] + wk[i]}) {
                        Integer y = -(base + shift), yk = 1;
                        for (int k = 1; k <= order; ++k) {
                            yk *= y;
                            ps[static_cast<std::size_t>(k)] += yk;
                        }
                    }
                }
                psum[(i * np + p) * np + q] = std::move(ps);
            }
        }
    }

    // insertions grouped by class
    struct Group {
        SymbolicClass cls;
        long mult = 0;
        std::vector<C> pre;  // binomial(mult,k) c0^(mult-k)
        std::vector<C> w;    // weight at each fixpoint
    };
    std::vector<Group> groups;
    for (const auto& c : ins) {
        bool found = false;
        for (auto& g : groups) {
            if (g.cls.c == c.c && g.cls.cx == c.cx) {
                ++g.mult;
                found = true;
                break;
            }
        }
        if (!found) groups.push_back({c, 1, {}, {}});
    }
    const RationalClass xiq = to_rational(xi);
    for (auto& g : groups) {
        C c0 = linear<C>(S.intersect(xiq, g.cls.c) / 2, S.intersect(xiq, g.cls.cx) / 2);
        long top = std::min<long>(g.mult, order);
        std::vector<C> pw(static_cast<std::size_t>(g.mult) + 1, C(1));
        for (long k = 1; k <= g.mult; ++k) pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * c0;
        for (long k = 0; k <= top; ++k)
            g.pre.push_back(scaled(pw[static_cast<std::size_t>(g.mult - k)], Rational(binomial(g.mult, k))));
        for (std::size_t i = 0; i < m; ++i)
            g.w.push_back(linear<C>(S.bundle_weight(g.cls.c, i, T), S.bundle_weight(g.cls.cx, i, T)));
    }
    std::vector<Rational> ptw(m);
    if (r > 0)
        for (std::size_t i = 0; i < m; ++i) ptw[i] = S.bundle_weight(pt.L1, i, T) * S.bundle_weight(pt.L2, i, T);
    std::vector<Rational> ptpre;
    for (int j = 0; j <= std::min(r, d); ++j) ptpre.push_back(Rational(binomial(r, j)) * pow(Rational(-1, 4), static_cast<unsigned>(r - j)));

    auto run_chunk = [&](std::size_t lo, std::size_t hi) {
        C acc(0);
        std::vector<int> sizes(m);
        std::vector<Integer> p(static_cast<std::size_t>(order) + 1), h(static_cast<std::size_t>(order) + 1);
        std::vector<C> num(static_cast<std::size_t>(order) + 1), term(static_cast<std::size_t>(order) + 1),
            tmp(static_cast<std::size_t>(order) + 1);
        for (std::size_t idx = lo; idx < hi; ++idx) {
            Integer tg(1);
            for (auto& x : p) x = 0;
            for (std::size_t i = 0; i < m; ++i) {
                std::size_t P = cs->id(idx, i), Q = cs->id(idx, m + i);
                sizes[i] = table[P].size() + table[Q].size();
                tg *= tang[i * np + P];
                tg *= tang[i * np + Q];
                if (sizes[i] == 0) continue;
                const auto& ps = psum[(i * np + P) * np + Q];
                for (int k = 1; k <= order; ++k) p[static_cast<std::size_t>(k)] += ps[static_cast<std::size_t>(k)];
            }
            // Newton: k h_k = sum_{j=1..k} p_j h_{k-j}
            h[0] = 1;
            for (int k = 1; k <= order; ++k) {
                Integer s(0);
                for (int j = 1; j <= k; ++j) s += p[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(k - j)];
                mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(k));
                h[static_cast<std::size_t>(k)] = s;
            }

            for (auto& x : num) x = C(0);
            num[0] = C(1);
            int deg = 0;  // highest possibly nonzero index of num
            for (const auto& g : groups) {
                C c1(0);
                for (std::size_t i = 0; i < m; ++i)
                    if (sizes[i]) c1 += scaled(g.w[i], Rational(sizes[i]));
                int top = static_cast<int>(g.pre.size()) - 1;
                C c1k(1);
                for (int k = 0; k <= top; ++k) {
                    term[static_cast<std::size_t>(k)] = g.pre[static_cast<std::size_t>(k)] * c1k;
                    if (k < top) c1k = c1k * c1;
                }
                int nd = std::min(order, deg + top);
                for (int k = 0; k <= nd; ++k) {
                    C s(0);
                    for (int j = std::max(0, k - top); j <= std::min(k, deg); ++j)
                        s += num[static_cast<std::size_t>(j)] * term[static_cast<std::size_t>(k - j)];
                    tmp[static_cast<std::size_t>(k)] = s;
                }
                for (int k = 0; k <= nd; ++k) num[static_cast<std::size_t>(k)] = tmp[static_cast<std::size_t>(k)];
                deg = nd;
            }
            if (r > 0) {
                Rational ptv(0);
                for (std::size_t i = 0; i < m; ++i)
                    if (sizes[i]) ptv += ptw[i] * sizes[i];
                std::vector<Rational> ps2(ptpre.size());
                Rational pj(1);
                for (std::size_t j = 0; j < ptpre.size(); ++j) {
                    ps2[j] = ptpre[j] * pj;
                    pj *= ptv;
                }
                int nd = std::min(order, deg + 2 * static_cast<int>(ptpre.size() - 1));
                for (int k = 0; k <= nd; ++k) {
                    C s(0);
                    for (std::size_t j = 0; j < ps2.size() && static_cast<int>(2 * j) <= k; ++j) {
                        int a = k - static_cast<int>(2 * j);
                        if (a > deg) continue;
                        s += scaled(num[static_cast<std::size_t>(a)], ps2[j]);
                    }
                    tmp[static_cast<std::size_t>(k)] = s;
                }
                for (int k = 0; k <= nd; ++k) num[static_cast<std::size_t>(k)] = tmp[static_cast<std::size_t>(k)];
                deg = nd;
            }
            C val(0);
            for (int k = 0; k <= std::min(deg, order); ++k)
                val += scaled(num[static_cast<std::size_t>(k)], Rational(h[static_cast<std::size_t>(order - k)]));
            acc += scaled(val, Rational(1) / Rational(tg));
        }
        return acc;
    };

    const std::size_t n = cs->size();
    const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(opt_.jobs, n / 64 + 1));
    C total(0);
    if (jobs == 1) {
        total = run_chunk(0, n);
    } else {
        // contiguous chunks, partial sums added in chunk order
        std::vector<C> part(jobs, C(0));
        std::vector<std::exception_ptr> err(jobs);
        std::vector<std::thread> th;
        for (std::size_t t = 0; t < jobs; ++t) {
            std::size_t lo = n * t / jobs, hi = n * (t + 1) / jobs;
            th.emplace_back([&, t, lo, hi]() {
                try {
                    part[t] = run_chunk(lo, hi);
                } catch (...) {
                    err[t] = std::current_exception();
                }
            });
        }
        for (auto& x : th) x.join();
        for (auto& e : err)
            if (e) std::rethrow_exception(e);
        for (auto& x : part) total += x;
    }
    evaluations_++;
    configs_summed_ += n;
    {
        std::lock_guard<std::mutex> g(mu_);
        subgroups_.insert(subgroup_key(T));
    }
    return total;
}

Rational DeltaEngine::delta_at(const EquivariantSurface& S, const DivisorClass& xi, long N,
                               const std::vector<RationalClass>& insertions, int r, const PointClassPair& pt,
                               const OneParamSubgroup& T) {
    return evaluate<Rational>(S, xi, N, lift(insertions), r, pt, T);
}

Rational DeltaEngine::delta(const EquivariantSurface& S, const DivisorClass& xi, long N,
                            const std::vector<RationalClass>& insertions, int r, const PointClassPair& pt) {
    auto ins = lift(insertions);
    check_inputs(S, N, ins, r, pt);
    const int d = static_cast<int>(wall_numbers(S, xi, N).d);
    std::string key;
    if (opt_.cache) {
        key = delta_cache_key(S, xi, N, ins, r, pt, false);
        if (auto hit = opt_.cache->get(key)) {
            if (auto q = decode_rational(*hit)) {
                cache_hits_++;
                return *q;
            }
        }
    }
    OneParamSubgroup T = pick_generic_T(S, d);
    auto t0 = std::chrono::steady_clock::now();
    Rational v = evaluate<Rational>(S, xi, N, ins, r, pt, T);
    if (opt_.cache) {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        opt_.cache->put(key, encode_value(v), "engine=1 T=" + subgroup_key(T) + " seconds=" + std::to_string(secs));
    }
    return v;
}

Poly DeltaEngine::delta_symbolic_at(const EquivariantSurface& S, const DivisorClass& xi, long N,
                                    const std::vector<SymbolicClass>& insertions, int r, const PointClassPair& pt,
                                    const OneParamSubgroup& T) {
    return evaluate<Poly>(S, xi, N, insertions, r, pt, T);
}

Poly DeltaEngine::delta_symbolic(const EquivariantSurface& S, const DivisorClass& xi, long N,
                                 const std::vector<SymbolicClass>& insertions, int r, const PointClassPair& pt) {
    check_inputs(S, N, insertions, r, pt);
    const int d = static_cast<int>(wall_numbers(S, xi, N).d);
    std::string key;
    if (opt_.cache) {
        key = delta_cache_key(S, xi, N, insertions, r, pt, true);
        if (auto hit = opt_.cache->get(key)) {
            if (auto p = decode_poly(*hit)) {
                cache_hits_++;
                return *p;
            }
        }
    }
    OneParamSubgroup T = pick_generic_T(S, d);
    auto t0 = std::chrono::steady_clock::now();
    Poly v = evaluate<Poly>(S, xi, N, insertions, r, pt, T);
    if (opt_.cache) {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        opt_.cache->put(key, encode_value(v), "engine=1 T=" + subgroup_key(T) + " seconds=" + std::to_string(secs));
    }
    return v;
}

}  // namespace dwc
