#ifndef FRIEZE_UNBOUNDED_HPP
#define FRIEZE_UNBOUNDED_HPP

#include <vector>

#include "frieze/classify.hpp"
#include "frieze/pattern.hpp"
#include "frieze/quadratic.hpp"

namespace frieze {

// Trace of w^l for the unit w = 9 + sqrt(80); always a rational integer,
// with t_0 = 2, t_1 = 18 and t_l = 18 t_{l-1} - t_{l-2}.
BigInt trace_t(long long ell);

// One term of a closed-form band entry: (alpha*w + beta)/den * w^(mult*l).
struct FormulaTerm {
    long long den;
    long long alpha;
    long long beta;
    int mult;
};

/**
 * The 12-row segment scheme of the unbounded height-8 construction.  Each
 * segment is a block of twelve band rows whose entries are either small
 * fixed integers or one of 76 closed-form functions a_1..a_76 of the
 * segment index l; consecutive copies stack into one SL_3-valid array whose
 * entries grow with |l|, so no vertical period can ever close it up.
 *
 * Two of the 76 printed formulas lost their middle constant in transmission
 * (index 30 and 62).  Rather than hard-coding a guess, the constructor
 * recovers each constant from the stored l = 0 excerpt, demands it be
 * rational, and cross-checks the completed formula against the l = 1
 * excerpt before the scheme becomes usable; derived_constant exposes the
 * recovered values.
 */
class SegmentScheme {
  public:
    static const SegmentScheme& instance();

    // a_index(l) as an exact field element (index 1..76).
    QuadNumber formula_value(int index, long long ell) const;

    // Band entry at segment row 1..12, band column 1..8.  The radical parts
    // of the terms must cancel; a residue throws NonIntegralValue carrying
    // the exact field value.
    BigInt band_entry(long row, long col, long long ell) const;

    // The l-th segment by itself, as a 12-row window (rows 1..12).
    FriezePattern segment(long long ell) const;

    // Constant recovered for formula 30 or 62.
    const Rational& derived_constant(int index) const;

  private:
    SegmentScheme();

    struct Slot {
        bool fixed;
        long long fixed_value;
        int formula;  // 1..76 when !fixed
    };

    std::vector<std::vector<FormulaTerm>> formulas_;  // [index-1] -> terms
    std::vector<std::vector<Slot>> slots_;            // [row-1][col-1]
    Rational c30_, c62_;
};

// Segments lo..hi stacked into one tall window (rows 12*lo+1 .. 12*hi+12).
FriezePattern stacked_segments(long long lo, long long hi);

struct StackReport {
    long long lo = 0, hi = 0;
    bool ok = false;
    std::vector<WindowFailure> failures;  // all failing windows, seams included
    std::vector<BigInt> max_entry;        // largest band entry per segment, lo..hi
};

StackReport verify_concatenation(long long lo, long long hi);

}  // namespace frieze

#endif  // FRIEZE_UNBOUNDED_HPP
