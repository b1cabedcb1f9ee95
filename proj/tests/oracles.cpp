#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace dwc::oracle {

std::vector<Integer> partition_series(int n, int power) {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int p = 0; p < power; ++p)
        for (int k = 1; k <= n; ++k)
            for (int i = k; i <= n; ++i) c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - k)];
    return c;
}

namespace {

struct Term {
    int x, y, sign;
};

// generators (sign +1) and first syzygies (sign -1) of the monomial ideal of P
std::vector<Term> resolution(const Partition& P) {
    // corners of the staircase: x^i y^{a(i)} where a(i) < a(i-1), plus x^{length}
    std::vector<std::pair<int, int>> gens;
    for (int i = 0; i <= P.length(); ++i)
        if (i == 0 || P.a(i) < P.a(i - 1)) gens.emplace_back(i, P.a(i));
    std::vector<Term> out;
    for (const auto& [x, y] : gens) out.push_back({x, y, 1});
    // gens are sorted by increasing x, decreasing y
    for (std::size_t k = 0; k + 1 < gens.size(); ++k)
        out.push_back({gens[k + 1].first, gens[k].second, -1});
    return out;
}

void add(Character2& c, int i, int j, long v) {
    if (v == 0) return;
    auto& e = c[{i, j}];
    e += v;
    if (e == 0) c.erase({i, j});
}

// exact division by (1 - t1) or (1 - t2); throws if not exact
Character2 divide(const Character2& c, bool first) {
    std::map<int, std::map<int, long>> lines;
    for (const auto& [k, v] : c) {
        int along = first ? k.first : k.second;
        int other = first ? k.second : k.first;
        lines[other][along] += v;
    }
    Character2 out;
    for (const auto& [other, line] : lines) {
        long acc = 0;
        int lo = line.begin()->first, hi = line.rbegin()->first;
        for (int a = lo; a <= hi; ++a) {
            auto it = line.find(a);
            if (it != line.end()) acc += it->second;
            if (first) add(out, a, other, acc);
            else add(out, other, a, acc);
        }
        if (acc != 0) throw std::logic_error("character not divisible");
    }
    return out;
}

}  // namespace

Character2 ext_character(const Partition& P, const Partition& Q) {
    // Hom(R(-a), R(-b)) has character t^(a-b) * R; the double complex of the two resolutions
    // gives chi(I_P, I_Q) = sum (-1)^.. t^(a-b) / ((1-t1)(1-t2))
    Character2 num;
    add(num, 0, 0, 1);
    for (const auto& a : resolution(P))
        for (const auto& b : resolution(Q)) add(num, a.x - b.x, a.y - b.y, -static_cast<long>(a.sign * b.sign));
    return divide(divide(num, true), false);
}

Rational delta_d0(const EquivariantSurface& S, const DivisorClass& xi, const std::vector<RationalClass>& ins, int r) {
    Rational v = pow(make_rational(-1, 4), static_cast<unsigned>(r));
    const RationalClass x = to_rational(xi);
    for (const auto& a : ins) v *= S.intersect(x, a) / 2;
    return v;
}

}  // namespace dwc::oracle
