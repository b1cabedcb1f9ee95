#pragma once

#include "dwc/partition.hpp"
#include "dwc/rational.hpp"
#include "dwc/surface.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dwc {

// linear form cx*u + cy*v in the two chart characters
struct WeightTerm {
    int cx = 0;
    int cy = 0;
    bool operator==(const WeightTerm& o) const = default;
    bool operator<(const WeightTerm& o) const { return cx != o.cx ? cx < o.cx : cy < o.cy; }
};

// Exponent pairs of the Laurent monomials of E_{P,Q}(x,y), as a multiset.
std::vector<WeightTerm> ext_terms(const Partition& P, const Partition& Q);

struct FixConfig {
    std::vector<Partition> P;  // first copy, one per fixpoint
    std::vector<Partition> Q;  // second copy
    int size_at(std::size_t i) const { return P[i].size() + Q[i].size(); }
    int total() const;
};

class NonGenericSubgroup : public std::runtime_error {
public:
    NonGenericSubgroup() : std::runtime_error("non-generic subgroup") {}
};

// All partitions of size <= d, numbered; configurations are stored as id tuples.
class ConfigSet {
public:
    ConfigSet(std::size_t m, int d);

    std::size_t m() const { return m_; }
    int d() const { return d_; }
    std::size_t size() const { return count_; }
    const std::vector<Partition>& table() const { return table_; }

    // slot j < m is P_j, slot m + j is Q_j
    std::uint16_t id(std::size_t config, std::size_t slot) const { return ids_[config * 2 * m_ + slot]; }
    FixConfig config(std::size_t i) const;

private:
    std::size_t m_;
    int d_;
    std::vector<Partition> table_;
    std::vector<std::uint16_t> ids_;
    std::size_t count_ = 0;
};

// every tuple of 2m partitions of total size d, in a fixed order
std::vector<FixConfig> enumerate_configs(std::size_t m, int d);

// product over fixpoints of the specialized tangent weights; exactly 2d factors
Integer tangent_factors(const FixConfig& c, const EquivariantSurface& S, const OneParamSubgroup& T);

}  // namespace dwc
