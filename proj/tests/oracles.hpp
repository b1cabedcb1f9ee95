#pragma once

// Independent reference computations used only by tests and the acceptance binary.

#include "dwc/bott.hpp"
#include "dwc/partition.hpp"
#include "dwc/rational.hpp"
#include "dwc/surface.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dwc::oracle {

// coefficients of prod_k 1/(1-q^k)^power up to q^n
std::vector<Integer> partition_series(int n, int power = 1);

// Laurent character sum_(i,j) c * t1^i t2^j
using Character2 = std::map<std::pair<int, int>, long>;

// chi(O,O) - chi(I_P, I_Q) from minimal free resolutions of the monomial ideals;
// box (i, s) of a partition (row i, column s) is the monomial x^i y^s
Character2 ext_character(const Partition& P, const Partition& Q);

// delta for d = 0: prod <xi.alpha>/2 * (-1/4)^r
Rational delta_d0(const EquivariantSurface& S, const DivisorClass& xi, const std::vector<RationalClass>& ins, int r);

}  // namespace dwc::oracle
