#pragma once

#include "dwc/rational.hpp"

#include <string>
#include <vector>

namespace dwc {

// character lambda^a mu^b of the 2-torus
struct Character {
    long a = 0;
    long b = 0;

    Character operator+(const Character& o) const { return {a + o.a, b + o.b}; }
    Character operator-(const Character& o) const { return {a - o.a, b - o.b}; }
    Character operator-() const { return {-a, -b}; }
    Character operator*(long k) const { return {a * k, b * k}; }
    bool operator==(const Character& o) const = default;
};

struct OneParamSubgroup {
    long wl = 1;
    long wm = 0;
    bool operator==(const OneParamSubgroup& o) const = default;
};

inline long specialize(const Character& c, const OneParamSubgroup& T) { return c.a * T.wl + c.b * T.wm; }

using DivisorClass = std::vector<long>;
using RationalClass = std::vector<Rational>;

RationalClass to_rational(const DivisorClass& D);

struct FixpointChart {
    Character wx;
    Character wy;
    std::vector<Character> bundle_weights;  // one per Picard basis element
};

enum class BaseModel { P2, P1xP1 };

class EquivariantSurface {
public:
    const std::vector<FixpointChart>& fixpoints() const { return fix_; }
    std::size_t num_fixpoints() const { return fix_.size(); }
    std::size_t rank() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const std::vector<std::vector<long>>& intersection_matrix() const { return form_; }
    const DivisorClass& canonical() const { return K_; }
    BaseModel base() const { return base_; }
    int num_blowups() const { return static_cast<int>(rank()) - (base_ == BaseModel::P2 ? 1 : 2); }

    // canonical string such as "p2:b0" or "p1xp1:b0:b2"
    const std::string& lineage() const { return lineage_; }

    long intersect(const DivisorClass& A, const DivisorClass& B) const;
    Rational intersect(const RationalClass& A, const RationalClass& B) const;

    Character bundle_weight(const DivisorClass& D, std::size_t k) const;
    Rational bundle_weight(const RationalClass& D, std::size_t k, const OneParamSubgroup& T) const;

    // basis element by name; "E" is accepted for E1
    DivisorClass basis_class(const std::string& name) const;

    friend EquivariantSurface base_p2();
    friend EquivariantSurface base_p1xp1();
    friend EquivariantSurface blowup(const EquivariantSurface& S, std::size_t k, bool swap_exceptional);
    friend EquivariantSurface relabel_fixpoints(const EquivariantSurface& S, const std::vector<std::size_t>& perm);

private:
    void check_class(std::size_t n) const;

    BaseModel base_ = BaseModel::P2;
    std::vector<FixpointChart> fix_;
    std::vector<std::string> names_;
    std::vector<std::vector<long>> form_;
    DivisorClass K_;
    std::string lineage_;
};

EquivariantSurface base_p2();
EquivariantSurface base_p1xp1();

// Blow up fixpoint k. The new fixpoints replace k in place: first the chart
// (wx, wy-wx), then (wy, wx-wy). swap_exceptional reverses that order.
EquivariantSurface blowup(const EquivariantSurface& S, std::size_t k, bool swap_exceptional = false);

// new fixpoint i is old fixpoint perm[i]
EquivariantSurface relabel_fixpoints(const EquivariantSurface& S, const std::vector<std::size_t>& perm);

// "p2", "p1xp1", optionally followed by ":b<k>" tokens
EquivariantSurface surface_from_lineage(const std::string& lineage);

// parse "2H-3E", "F+G", "-E2", "0"
DivisorClass parse_class(const EquivariantSurface& S, const std::string& text);
std::string format_class(const EquivariantSurface& S, const DivisorClass& D);

}  // namespace dwc
