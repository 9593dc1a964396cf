#ifndef FRIEZE_PATTERN_HPP
#define FRIEZE_PATTERN_HPP

#include <optional>
#include <string>
#include <vector>

#include "frieze/matrix.hpp"
#include "frieze/rational.hpp"

namespace frieze {

/** Abstract (row, column) position in the bi-infinite array. */
struct Position {
    long i = 0;
    long j = 0;
    friend bool operator==(const Position&, const Position&) = default;
};

/**
 * A banded SL_k frieze candidate.
 *
 * The object stores one band row per stored row index: row i's band entries
 * c(i,1..n) sit at columns i..i+n-1 of the bi-infinite array.  Everything
 * else is layout: a 1 on either side of the band (columns i-1 and i+n), k-1
 * zeros beyond each 1, and a glide repetition with horizontal period
 * N = n+k+1 and sign eps = (-1)^(k-1), i.e. a(i, j+N) = eps * a(i, j).
 *
 * Vertically the pattern is either Periodic (stored rows repeat cyclically
 * in both directions) or a Window (only the stored row range is resolvable;
 * asking for a row outside it throws RowOutOfRange).
 *
 * Nothing here checks the actual SL_k determinant condition; that lives in
 * verify_slk so that invalid candidates can still be loaded and examined.
 */
class FriezePattern {
  public:
    static FriezePattern periodic(long k, long n, std::vector<std::vector<Rational>> band_rows);
    static FriezePattern window(long k, long n, std::vector<std::vector<Rational>> band_rows,
                                long first_row);

    long k() const { return k_; }
    long n() const { return n_; }
    bool is_periodic() const { return periodic_; }
    long glide_period() const { return n_ + k_ + 1; }
    int epsilon() const { return k_ % 2 == 0 ? -1 : 1; }

    // Number of stored band rows (the vertical period when periodic).
    long row_count() const { return static_cast<long>(bands_.size()); }
    long first_row() const { return periodic_ ? 1 : first_row_; }
    long last_row() const { return first_row() + row_count() - 1; }
    bool row_resolvable(long i) const { return periodic_ || (i >= first_row_ && i <= last_row()); }

    const std::vector<Rational>& band_row(long i) const;
    const std::vector<std::vector<Rational>>& band_rows() const { return bands_; }

    Rational entry(long i, long j) const;
    ExactMatrix window_matrix(long i, long j, long size) const;
    Rational minor_det(long i, long j, long size) const;

    // Smallest vertical period: for periodic storage the smallest divisor of
    // row_count() under which the band rows repeat; for a window, the
    // smallest shift consistent with every stored row (nullopt if none).
    std::optional<long> minimal_period() const;

    // True when both describe the same bi-infinite array (same k, n and
    // entries; periodic storages may differ in stored period).
    bool equal_as_pattern(const FriezePattern& other) const;

  private:
    FriezePattern(long k, long n, std::vector<std::vector<Rational>> band_rows, bool periodic,
                  long first_row);

    long k_;
    long n_;
    std::vector<std::vector<Rational>> bands_;
    bool periodic_;
    long first_row_;  // meaningful only for window mode
};

// Rebuild a pattern from a printed rectangular excerpt of the array.
// `grid[r][p]` is the printed value of row first_row+r at column
// first_col+p.  Band entries are read off through the layout (wrapping
// through the glide where the excerpt is narrower than one period) and the
// whole grid is then re-rendered from the parsed bands; any mismatch throws
// ParseError, so a typo in a transcription cannot slip through.
FriezePattern from_printed_grid(long k, long n, const std::vector<std::vector<long long>>& grid,
                                long first_col, bool periodic_rows, long first_row = 1);

}  // namespace frieze

#endif  // FRIEZE_PATTERN_HPP
