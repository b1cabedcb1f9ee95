#include "dwc/surface.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dwc {

RationalClass to_rational(const DivisorClass& D) {
    RationalClass r;
    r.reserve(D.size());
    for (long c : D) r.emplace_back(c);
    return r;
}

void EquivariantSurface::check_class(std::size_t n) const {
    if (n != rank()) throw std::invalid_argument("divisor class has wrong length for " + lineage_);
}

long EquivariantSurface::intersect(const DivisorClass& A, const DivisorClass& B) const {
    check_class(A.size());
    check_class(B.size());
    long s = 0;
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j) s += A[i] * form_[i][j] * B[j];
    return s;
}

Rational EquivariantSurface::intersect(const RationalClass& A, const RationalClass& B) const {
    check_class(A.size());
    check_class(B.size());
    Rational s(0);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j)
            if (form_[i][j] != 0) s += A[i] * form_[i][j] * B[j];
    return s;
}

Character EquivariantSurface::bundle_weight(const DivisorClass& D, std::size_t k) const {
    check_class(D.size());
    if (k >= fix_.size()) throw std::out_of_range("fixpoint index");
    Character c;
    for (std::size_t i = 0; i < D.size(); ++i) c = c + fix_[k].bundle_weights[i] * D[i];
    return c;
}

Rational EquivariantSurface::bundle_weight(const RationalClass& D, std::size_t k, const OneParamSubgroup& T) const {
    check_class(D.size());
    if (k >= fix_.size()) throw std::out_of_range("fixpoint index");
    Rational w(0);
    for (std::size_t i = 0; i < D.size(); ++i) {
        long s = specialize(fix_[k].bundle_weights[i], T);
        if (s != 0) w += D[i] * s;
    }
    return w;
}

DivisorClass EquivariantSurface::basis_class(const std::string& name) const {
    std::string n = name;
    if (n == "E" && num_blowups() >= 1) n = "E1";
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == n) {
            DivisorClass D(rank(), 0);
            D[i] = 1;
            return D;
        }
    }
    throw std::invalid_argument("unknown basis class '" + name + "' on " + lineage_);
}

EquivariantSurface base_p2() {
    EquivariantSurface S;
    S.base_ = BaseModel::P2;
    S.fix_ = {
        {{1, 0}, {0, 1}, {{0, 0}}},
        {{-1, 0}, {-1, 1}, {{1, 0}}},
        {{0, -1}, {1, -1}, {{0, 1}}},
    };
    S.names_ = {"H"};
    S.form_ = {{1}};
    S.K_ = {-3};
    S.lineage_ = "p2";
    return S;
}

EquivariantSurface base_p1xp1() {
    EquivariantSurface S;
    S.base_ = BaseModel::P1xP1;
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) S.fix_.push_back({{1 - 2 * i, 0}, {0, 1 - 2 * j}, {{i, 0}, {0, j}}});
    S.names_ = {"F", "G"};
    S.form_ = {{0, 1}, {1, 0}};
    S.K_ = {-2, -2};
    S.lineage_ = "p1xp1";
    return S;
}

EquivariantSurface blowup(const EquivariantSurface& S, std::size_t k, bool swap_exceptional) {
    if (k >= S.fix_.size()) throw std::out_of_range("blowup: invalid fixpoint index " + std::to_string(k));
    EquivariantSurface R;
    R.base_ = S.base_;
    for (std::size_t i = 0; i < S.fix_.size(); ++i) {
        const auto& p = S.fix_[i];
        if (i != k) {
            FixpointChart c = p;
            c.bundle_weights.push_back({0, 0});
            R.fix_.push_back(c);
            continue;
        }
        // O(E) is trivialized by the inverse of the local equation of E
        FixpointChart q0{p.wx, p.wy - p.wx, p.bundle_weights};
        q0.bundle_weights.push_back(-p.wx);
        FixpointChart q1{p.wy, p.wx - p.wy, p.bundle_weights};
        q1.bundle_weights.push_back(-p.wy);
        if (swap_exceptional) std::swap(q0, q1);
        R.fix_.push_back(q0);
        R.fix_.push_back(q1);
    }
    R.names_ = S.names_;
    R.names_.push_back("E" + std::to_string(S.num_blowups() + 1));
    std::size_t n = S.rank();
    R.form_ = S.form_;
    for (auto& row : R.form_) row.push_back(0);
    R.form_.push_back(std::vector<long>(n + 1, 0));
    R.form_[n][n] = -1;
    R.K_ = S.K_;
    R.K_.push_back(1);
    R.lineage_ = S.lineage_ + ":b" + std::to_string(k) + (swap_exceptional ? "s" : "");
    return R;
}

EquivariantSurface relabel_fixpoints(const EquivariantSurface& S, const std::vector<std::size_t>& perm) {
    if (perm.size() != S.fix_.size()) throw std::invalid_argument("relabel: permutation size");
    std::vector<bool> seen(perm.size(), false);
    EquivariantSurface R = S;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size() || seen[perm[i]]) throw std::invalid_argument("relabel: not a permutation");
        seen[perm[i]] = true;
        R.fix_[i] = S.fix_[perm[i]];
    }
    R.lineage_ += ":perm";
    for (std::size_t i = 0; i < perm.size(); ++i) R.lineage_ += (i ? "," : "") + std::to_string(perm[i]);
    return R;
}

EquivariantSurface surface_from_lineage(const std::string& lineage) {
    std::vector<std::string> tok;
    std::stringstream ss(lineage);
    std::string t;
    while (std::getline(ss, t, ':')) tok.push_back(t);
    if (tok.empty()) throw std::invalid_argument("empty surface lineage");
    EquivariantSurface S;
    if (tok[0] == "p2") S = base_p2();
    else if (tok[0] == "p1xp1") S = base_p1xp1();
    else throw std::invalid_argument("unknown base model '" + tok[0] + "'");
    for (std::size_t i = 1; i < tok.size(); ++i) {
        const std::string& b = tok[i];
        if (b.size() < 2 || b[0] != 'b') throw std::invalid_argument("bad lineage token '" + b + "'");
        bool swap = b.back() == 's';
        std::string digits = b.substr(1, b.size() - 1 - (swap ? 1 : 0));
        if (digits.empty()) throw std::invalid_argument("bad lineage token '" + b + "'");
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad lineage token '" + b + "'");
        S = blowup(S, std::stoul(digits), swap);
    }
    return S;
}

DivisorClass parse_class(const EquivariantSurface& S, const std::string& text) {
    DivisorClass D(S.rank(), 0);
    std::size_t i = 0;
    auto fail = [&]() { throw std::invalid_argument("cannot parse class '" + text + "'"); };
    bool any = false;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        } else if (any) {
            fail();
        }
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        long coef = j > i ? std::stol(text.substr(i, j - i)) : 1;
        i = j;
        std::size_t k = i;
        while (k < text.size() && std::isalnum(static_cast<unsigned char>(text[k]))) ++k;
        std::string name = text.substr(i, k - i);
        i = k;
        if (name.empty()) {
            // a bare integer is only meaningful as "0"
            if (coef != 0) fail();
        } else {
            DivisorClass b = S.basis_class(name);
            for (std::size_t c = 0; c < D.size(); ++c) D[c] += sign * coef * b[c];
        }
        any = true;
    }
    if (!any) fail();
    return D;
}

std::string format_class(const EquivariantSurface& S, const DivisorClass& D) {
    std::string out;
    for (std::size_t i = 0; i < D.size(); ++i) {
        long c = D[i];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? "+" : "-";
        else if (c < 0) out += "-";
        long a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a);
        out += S.basis_names()[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace dwc
