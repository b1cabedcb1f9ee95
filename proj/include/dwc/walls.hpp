#pragma once

#include "dwc/rational.hpp"
#include "dwc/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dwc {

// L_0 + eps L_1 + eps^2 L_2 + ... for all sufficiently small eps > 0
struct LexPolarization {
    std::vector<DivisorClass> levels;
};

// "1,-1;0,1" -> levels (1,-1) and (0,1)
LexPolarization parse_polarization(const std::string& text);
std::string format_polarization(const LexPolarization& L);

// sign of <xi . L> in the lexicographic sense
int lex_sign(const EquivariantSurface& S, const DivisorClass& xi, const LexPolarization& L);

struct WallNumbers {
    long d = 0;
    long e = 0;
};

WallNumbers wall_numbers(const EquivariantSurface& S, const DivisorClass& xi, long N);

struct WallSearch {
    std::vector<DivisorClass> walls;  // sorted by coordinates
    std::vector<long> box;            // half-widths actually searched
    bool rigorous = true;             // false when the box came from doubling until stable
};

WallSearch search_walls(const EquivariantSurface& S, const DivisorClass& c1, long c2, const LexPolarization& Lminus,
                        const LexPolarization& Lplus);

std::vector<DivisorClass> enumerate_walls(const EquivariantSurface& S, const DivisorClass& c1, long c2,
                                          const LexPolarization& Lminus, const LexPolarization& Lplus);

enum class ClosedFormModel { HatP2, P1xP1 };

// c1 in the model's basis: (H,E) for HatP2, (F,G) for P1xP1; only c1 mod 2 is used.
// delta empty means the limit endpoint: H for HatP2, G for P1xP1.
std::vector<DivisorClass> closed_form_walls(ClosedFormModel model, const DivisorClass& c1, long c2,
                                            const std::optional<Rational>& delta);

// the polarizations the closed forms refer to: F+eps(E or G) and H-delta E / F+delta G
std::pair<LexPolarization, LexPolarization> closed_form_endpoints(ClosedFormModel model,
                                                                  const std::optional<Rational>& delta);

}  // namespace dwc
