#pragma once

#include "dwc/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dwc {

using Matrix = std::vector<std::vector<Rational>>;

class InconsistentSystem : public std::runtime_error {
public:
    explicit InconsistentSystem(std::size_t row)
        : std::runtime_error("inconsistent system: equation " + std::to_string(row) + " violated"), row_(row) {}
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

class RankDeficient : public std::runtime_error {
public:
    explicit RankDeficient(std::size_t rank) : std::runtime_error("rank deficient"), rank_(rank) {}
    std::size_t rank() const { return rank_; }

private:
    std::size_t rank_;
};

// Exact Gaussian elimination with full pivoting. A may have more rows than
// columns; every equation is checked against the returned solution.
std::vector<Rational> solve_linear_system(const Matrix& A, const std::vector<Rational>& b);

// inverse of a square nonsingular matrix
Matrix invert_matrix(const Matrix& A);

}  // namespace dwc
