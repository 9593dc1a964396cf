#ifndef FRIEZE_CLASSIFY_HPP
#define FRIEZE_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frieze/pattern.hpp"

namespace frieze {

struct WindowFailure {
    Position at;   // top-left corner of the k x k window
    Rational det;  // its determinant (should have been 1)
};

struct VerifyReport {
    std::vector<WindowFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Check that every adjacent k x k window determinant equals 1.  Rows are the
// window top edges; the column scan j in [i-k, i+n+1] covers one full
// horizontal period of distinct windows (the glide multiplies a k x k window
// by a sign whose k-th power is +1, so further columns repeat).
VerifyReport verify_slk(const FriezePattern& f);
VerifyReport verify_slk(const FriezePattern& f, long row_begin, long row_end);

struct Witness {
    std::string property;
    Position at;
    Rational value;
};

struct ClassificationReport {
    bool is_slk = false;
    bool integral = false;
    bool nonzero = false;   // no zero band entries
    bool positive = false;  // band entries strictly positive
    std::optional<long> period;
    bool generic = false;
    bool tame = false;
    bool wild = false;
    std::vector<Witness> witnesses;  // one or more per failed property, sorted
};

ClassificationReport classify(const FriezePattern& f);

// residual of the Dodgson/Sylvester determinant identity at (i, j); zero for
// every array whatsoever, which makes it a strong self-test of the window
// machinery.  ell >= 1; D^0 = 1.
Rational sylvester_residual(const FriezePattern& f, long i, long j, long ell);

// The array of (k-1) x (k-1) adjacent minors over one vertical period,
// laid out like the checking set: row r holds D^{k-1}_{i,j} for
// i = first_row + r and j = i - k .. i + n + 1.
struct DualArray {
    long first_row = 1;
    long col_offset = 0;  // row i starts at column i + col_offset
    std::vector<std::vector<Rational>> rows;
};

DualArray dual(const FriezePattern& f);

// Search for (s, t) with |s|, |t| <= n+k+1 such that
// D^{k-1}_{i,j} = a_{j+t, i+s} for all checked positions; candidates are
// tried in increasing |s|+|t| (ties by s, then t) and the first match is
// returned.  nullopt when nothing matches (wild patterns).
std::optional<std::pair<long, long>> locate_dual_offset(const FriezePattern& f);

struct LemmaCheck {
    bool hypothesis;  // D^l_{1,j} > 0 for l = 1..k-1, j = 1..n
    bool conclusion;  // the pattern classifies as generic
};

LemmaCheck lemma_check(const FriezePattern& f);

}  // namespace frieze

#endif  // FRIEZE_CLASSIFY_HPP
