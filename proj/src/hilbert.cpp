#include "dwc/hilbert.hpp"

#include <algorithm>
#include <limits>

namespace dwc {

std::vector<WeightTerm> ext_terms(const Partition& P, const Partition& Q) {
    // pad to a common length with a trailing zero part
    const int r = std::max(P.length(), Q.length()) + 1;
    std::vector<WeightTerm> out;
    for (int i = 1; i <= r; ++i) {
        for (int j = i; j <= r; ++j) {
            for (int s = P.a(j); s < P.a(j - 1); ++s) out.push_back({i - j - 1, Q.a(i - 1) - s - 1});
            for (int s = Q.a(j); s < Q.a(j - 1); ++s) out.push_back({j - i, s - P.a(i - 1)});
        }
    }
    return out;
}

int FixConfig::total() const {
    int t = 0;
    for (std::size_t i = 0; i < P.size(); ++i) t += size_at(i);
    return t;
}

ConfigSet::ConfigSet(std::size_t m, int d) : m_(m), d_(d) {
    if (m == 0) throw std::invalid_argument("ConfigSet: need at least one fixpoint");
    if (d < 0) throw std::invalid_argument("ConfigSet: negative length");
    std::vector<std::size_t> first(static_cast<std::size_t>(d) + 2, 0);
    for (int n = 0; n <= d; ++n) {
        first[static_cast<std::size_t>(n)] = table_.size();
        for (auto& p : partitions(n)) table_.push_back(std::move(p));
    }
    first[static_cast<std::size_t>(d) + 1] = table_.size();
    if (table_.size() > std::numeric_limits<std::uint16_t>::max()) throw std::length_error("ConfigSet: too many partitions");

    const std::size_t slots = 2 * m;
    std::vector<std::uint16_t> cur(slots, 0);
    auto rec = [&](auto&& self, std::size_t slot, int left) -> void {
        if (slot == slots) {
            if (left == 0) ids_.insert(ids_.end(), cur.begin(), cur.end());
            return;
        }
        for (int n = 0; n <= left; ++n) {
            for (std::size_t id = first[static_cast<std::size_t>(n)]; id < first[static_cast<std::size_t>(n) + 1]; ++id) {
                cur[slot] = static_cast<std::uint16_t>(id);
                self(self, slot + 1, left - n);
            }
        }
    };
    rec(rec, 0, d);
    count_ = ids_.size() / slots;
}

FixConfig ConfigSet::config(std::size_t i) const {
    FixConfig c;
    for (std::size_t j = 0; j < m_; ++j) {
        c.P.push_back(table_[id(i, j)]);
        c.Q.push_back(table_[id(i, m_ + j)]);
    }
    return c;
}

std::vector<FixConfig> enumerate_configs(std::size_t m, int d) {
    ConfigSet cs(m, d);
    std::vector<FixConfig> out;
    out.reserve(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) out.push_back(cs.config(i));
    return out;
}

Integer tangent_factors(const FixConfig& c, const EquivariantSurface& S, const OneParamSubgroup& T) {
    if (c.P.size() != S.num_fixpoints() || c.Q.size() != S.num_fixpoints())
        throw std::invalid_argument("tangent_factors: configuration does not match surface");
    Integer prod(1);
    for (std::size_t i = 0; i < S.num_fixpoints(); ++i) {
        long u = specialize(S.fixpoints()[i].wx, T);
        long v = specialize(S.fixpoints()[i].wy, T);
        for (const Partition* p : {&c.P[i], &c.Q[i]}) {
            for (const auto& t : ext_terms(*p, *p)) {
                long f = t.cx * u + t.cy * v;
                if (f == 0) throw NonGenericSubgroup();
                prod *= f;
            }
        }
    }
    return prod;
}

}  // namespace dwc
