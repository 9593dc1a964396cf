#ifndef FRIEZE_FIXTURES_HPP
#define FRIEZE_FIXTURES_HPP

#include <vector>

#include "frieze/pattern.hpp"

// Built-in sample patterns.  Each is transcribed as the printed excerpt it
// came from and parsed through from_printed_grid, which re-renders the whole
// excerpt from the parsed bands -- so a wrong digit anywhere in these tables
// refuses to load rather than silently shipping a corrupt fixture.

namespace frieze::fixtures {

// 9-periodic height-5 SL_3 candidate with mixed magnitudes (rows 1..9).
const FriezePattern& nine_periodic_h5();

// Height-4 SL_3 pattern with two alternating band rows (3,8,4,7)/(3,2,4,1).
const FriezePattern& tame_h4();

// Height-3 SL_3 pattern containing 0 and -1 band entries; tame but with
// vanishing interior 2x2 minors.
const FriezePattern& nongeneric_h3();

// Height-4 SL_3 pattern with bands (1,1,2,1)/(1,1,2,4); wild.
const FriezePattern& wild_h4();

// Height-1 SL_2 pattern with bands 1,2,1,2 (smallest non-trivial positive
// integral SL_2 example).
const FriezePattern& cc_h1();

// Twelve 2-row pieces over height 5 (k=3), used as seed vertices for the
// successor graph.  Piece t (t = 0..11) holds rows (v1, v2).
const std::vector<FriezePattern>& seed_pieces();

// Printed 12x21 excerpts of the quadratic-field segment at l = 0 and l = 1.
const std::vector<std::vector<long long>>& segment_grid(int ell);

// The same excerpts parsed as 12-row windows (rows 1..12, columns 0..20).
FriezePattern segment_excerpt(int ell);

}  // namespace frieze::fixtures

#endif  // FRIEZE_FIXTURES_HPP
