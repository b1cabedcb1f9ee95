#pragma once

#include "dwc/bott.hpp"
#include "dwc/poly.hpp"
#include "dwc/rational.hpp"
#include "dwc/surface.hpp"
#include "dwc/walls.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace dwc {

// sum_j c_j X^(N-2j) Y^j, with X of weight 1 and Y of weight 2
struct InvariantPolynomial {
    std::string x = "h";
    std::string y = "p";
    long N = 0;
    std::map<long, Rational> coeff;  // j -> c_j, zeros omitted
    std::set<long> unstable;         // j outside the stable range

    Rational at(long j) const;
    std::string to_string() const;
    bool operator==(const InvariantPolynomial& o) const;
};

struct CrossingRecord {
    std::string surface;
    DivisorClass c1;
    long c2 = 0;
    std::string from;
    std::string to;
    std::vector<DivisorClass> walls;
    bool rigorous = true;
};

// the overdetermined fit has no solution, or a delta is outside the ansatz
class FitInconsistent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// one crossing_sum evaluation, kept when recording is on
struct CrossingCall {
    EquivariantSurface surface;
    DivisorClass c1;
    long c2 = 0;
    LexPolarization from;
    LexPolarization to;
    std::vector<RationalClass> insertions;
    int r = 0;
    PointClassPair pt;
    Rational value;
};

enum class RuledModel { P1xP1, HatP2 };
enum class RuledC1 { Zero, F };

struct FitPoint {
    long d, w, b, r, N, K2;
    Rational value;
};

struct FitResult {
    int k = 0;
    MPoly Q;  // in N, d, r, K2
    MPoly P;  // the binomial leading structure
    MPoly R;  // Q - P
    std::size_t equations = 0;
    std::size_t unknowns = 0;
    std::vector<FitPoint> points;
};

class Pipelines {
public:
    explicit Pipelines(DeltaEngine& engine) : eng_(engine) {}

    // sum over W(L-, L+) of (-1)^e delta_xi(alpha), N = 4 c2 - c1^2 - 3
    Rational crossing_sum(const EquivariantSurface& S, const DivisorClass& c1, long c2, const LexPolarization& Lminus,
                          const LexPolarization& Lplus, const std::vector<RationalClass>& insertions, int r,
                          const PointClassPair& pt);

    InvariantPolynomial p2_su2(long N);
    InvariantPolynomial p2_so3(long N);
    InvariantPolynomial ruled_invariant(RuledModel model, RuledC1 c1, long N);

    // coefficients Phi(F^i G^(N-i)) (P1xP1) or Phi(F^i E^(N-i)) (hat P2, c1 = 0) or
    // Phi(H^i E^(N-i)) (hat P2, c1 = F), i = 0..N
    std::vector<Rational> ruled_coefficients(RuledModel model, RuledC1 c1, long N);

    FitResult fit_Q(int k, int extra = 1);

    const std::vector<CrossingRecord>& crossings() const { return log_; }
    void set_recording(bool on) { recording_ = on; }
    const std::vector<CrossingCall>& calls() const { return calls_; }
    DeltaEngine& engine() { return eng_; }

private:
    const WallSearch& walls(const EquivariantSurface& S, const DivisorClass& c1, long c2, const LexPolarization& Lm,
                            const LexPolarization& Lp);

    Rational phi_p2_H(long a, long k);
    Rational phi_pp_F(long a, long b, long k);
    Rational phi_p2h_F(long i, long a, long k);

    DeltaEngine& eng_;
    std::map<std::string, WallSearch> wall_memo_;
    std::vector<CrossingRecord> log_;
    bool recording_ = false;
    std::vector<CrossingCall> calls_;
    std::map<std::tuple<long, long, long>, Rational> memo_p2_H_, memo_pp_F_, memo_p2h_F_;
};

// (L_F, q) coefficients of a form in (a, b), given by its a^i b^(N-i) coefficients
InvariantPolynomial to_lq(RuledModel model, const std::vector<Rational>& form, long N);

// E_N(L, q) - E_N(L/2, q)
InvariantPolynomial halving_difference(const InvariantPolynomial& E);

// P_k(N, d, r, K2) from the binomial ansatz
MPoly leading_binomial_part(int k);

}  // namespace dwc
