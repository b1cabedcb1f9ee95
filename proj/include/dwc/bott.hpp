#pragma once

#include "dwc/cache.hpp"
#include "dwc/hilbert.hpp"
#include "dwc/poly.hpp"
#include "dwc/rational.hpp"
#include "dwc/surface.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace dwc {

// two classes with <L1.L2> = 1, standing in for the point class
struct PointClassPair {
    RationalClass L1;
    RationalClass L2;
};

// insertion c + x*cx with x a formal variable
struct SymbolicClass {
    RationalClass c;
    RationalClass cx;
};

struct DeltaStats {
    std::size_t evaluations = 0;
    std::size_t cache_hits = 0;
    std::size_t configs_summed = 0;
    std::set<std::string> subgroups;  // "wl,wm" actually used
};

class DeltaEngine {
public:
    struct Options {
        unsigned jobs = 1;
        ResultCache* cache = nullptr;  // not owned
    };

    DeltaEngine();
    explicit DeltaEngine(Options opt);

    // delta_{xi,N}(alpha_1 ... alpha_{N-2r} pt^r), T chosen by pick_generic_T
    Rational delta(const EquivariantSurface& S, const DivisorClass& xi, long N,
                   const std::vector<RationalClass>& insertions, int r, const PointClassPair& pt);

    // same with a caller-chosen subgroup; never cached
    Rational delta_at(const EquivariantSurface& S, const DivisorClass& xi, long N,
                      const std::vector<RationalClass>& insertions, int r, const PointClassPair& pt,
                      const OneParamSubgroup& T);

    // insertions may depend linearly on x; result is a polynomial in x
    Poly delta_symbolic(const EquivariantSurface& S, const DivisorClass& xi, long N,
                        const std::vector<SymbolicClass>& insertions, int r, const PointClassPair& pt);
    Poly delta_symbolic_at(const EquivariantSurface& S, const DivisorClass& xi, long N,
                           const std::vector<SymbolicClass>& insertions, int r, const PointClassPair& pt,
                           const OneParamSubgroup& T);

    // first (1,q), q = 2,3,..., with no vanishing tangent weight on Hilb^d
    OneParamSubgroup pick_generic_T(const EquivariantSurface& S, int d) const;
    bool is_generic(const EquivariantSurface& S, int d, const OneParamSubgroup& T) const;
    // count distinct generic subgroups (p,q) with small p, q in a fixed order
    std::vector<OneParamSubgroup> generic_subgroups(const EquivariantSurface& S, int d, std::size_t count) const;

    DeltaStats stats() const;
    unsigned jobs() const { return opt_.jobs; }

    std::shared_ptr<const ConfigSet> configs(std::size_t m, int d) const;

private:
    template <typename C>
    C evaluate(const EquivariantSurface& S, const DivisorClass& xi, long N, const std::vector<SymbolicClass>& ins,
               int r, const PointClassPair& pt, const OneParamSubgroup& T);

    Options opt_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<std::size_t, int>, std::shared_ptr<const ConfigSet>> configs_;
    std::atomic<std::size_t> evaluations_{0};
    std::atomic<std::size_t> cache_hits_{0};
    std::atomic<std::size_t> configs_summed_{0};
    std::set<std::string> subgroups_;
};

std::string delta_cache_key(const EquivariantSurface& S, const DivisorClass& xi, long N,
                            const std::vector<SymbolicClass>& insertions, int r, const PointClassPair& pt,
                            bool symbolic);

}  // namespace dwc
