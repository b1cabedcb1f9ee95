#pragma once

#include "dwc/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwc {

enum class BlowupKind { S, B };

class UndeterminedPolynomial : public std::runtime_error {
public:
    UndeterminedPolynomial(int index, int h)
        : std::runtime_error("recursion does not determine U_" + std::to_string(index) + " (coefficient vanishes at h=" +
                             std::to_string(h) + ")"),
          index_(index), h_(h) {}
    int index() const { return index_; }
    int h() const { return h_; }

private:
    int index_;
    int h_;
};

struct BlowupTable {
    BlowupKind kind = BlowupKind::S;
    std::vector<Poly> polys;                 // index k -> U_k
    std::map<int, int> solved_at;           // k -> h of the relation used
    std::vector<std::string> warnings;      // soft degree-pattern checks
};

// left minus right side of the recursion at h; U must hold indices up to h+4
Poly recursion_residual(const std::vector<Poly>& U, int h);

// Fill indices 0..kmax from seeds. Indices of the wrong parity are zero.
// Each missing U_m is solved from the first relation in which it is the only
// unknown; throws UndeterminedPolynomial if its coefficient vanishes there.
BlowupTable generate_blowup_table(BlowupKind kind, const std::map<int, Poly>& seeds, int kmax);

// seeds as printed: S1, S3, S7 (S5 is derived) and B0, B2, B4
std::map<int, Poly> standard_seeds(BlowupKind kind);

Poly s_poly(int k);
Poly b_poly(int k);

}  // namespace dwc
