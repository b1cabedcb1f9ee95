#include "dwc/linsolve.hpp"

#include <numeric>

namespace dwc {

namespace {

// pivot cost: |num| * den, smaller is better
Integer pivot_cost(const Rational& q) { return abs(q.get_num()) * q.get_den(); }

std::size_t first_violated(const Matrix& A, const std::vector<Rational>& b, const std::vector<Rational>& x) {
    for (std::size_t i = 0; i < A.size(); ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < x.size(); ++j) s += A[i][j] * x[j];
        if (s != b[i]) return i;
    }
    return A.size();
}

}  // namespace

std::vector<Rational> solve_linear_system(const Matrix& A, const std::vector<Rational>& b) {
    const std::size_t m = A.size();
    if (b.size() != m) throw std::invalid_argument("solve_linear_system: size mismatch");
    const std::size_t n = m ? A[0].size() : 0;
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("solve_linear_system: ragged matrix");

    Matrix M = A;
    std::vector<Rational> rhs = b;
    std::vector<std::size_t> col(n);
    std::iota(col.begin(), col.end(), 0);

    std::size_t rank = 0;
    for (; rank < std::min(m, n); ++rank) {
        std::size_t pr = m, pc = n;
        Integer best;
        for (std::size_t i = rank; i < m; ++i) {
            for (std::size_t j = rank; j < n; ++j) {
                if (M[i][j] == 0) continue;
                Integer c = pivot_cost(M[i][j]);
                if (pr == m || c < best) {
                    best = c;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == m) break;
        std::swap(M[rank], M[pr]);
        std::swap(rhs[rank], rhs[pr]);
        if (pc != rank) {
            for (auto& row : M) std::swap(row[rank], row[pc]);
            std::swap(col[rank], col[pc]);
        }
        const Rational piv = M[rank][rank];
        for (std::size_t i = rank + 1; i < m; ++i) {
            if (M[i][rank] == 0) continue;
            Rational f = M[i][rank] / piv;
            for (std::size_t j = rank; j < n; ++j) M[i][j] -= f * M[rank][j];
            rhs[i] -= f * rhs[rank];
        }
    }

    // back substitution with free variables set to zero
    std::vector<Rational> y(n);
    for (std::size_t k = rank; k-- > 0;) {
        Rational s = rhs[k];
        for (std::size_t j = k + 1; j < rank; ++j) s -= M[k][j] * y[j];
        y[k] = s / M[k][k];
    }
    std::vector<Rational> x(n);
    for (std::size_t k = 0; k < n; ++k) x[col[k]] = y[k];

    std::size_t bad = first_violated(A, b, x);
    if (bad < m) throw InconsistentSystem(bad);
    if (rank < n) throw RankDeficient(rank);
    return x;
}

Matrix invert_matrix(const Matrix& A) {
    const std::size_t n = A.size();
    Matrix inv(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n);
        e[j] = 1;
        auto c = solve_linear_system(A, e);
        for (std::size_t i = 0; i < n; ++i) inv[i][j] = c[i];
    }
    return inv;
}

}  // namespace dwc
