#ifndef FRIEZE_ENUMERATE_HPP
#define FRIEZE_ENUMERATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "frieze/pattern.hpp"

namespace frieze {

/**
 * Exhaustive census of positive integral SL_k bands of width n, driven by
 * the transfer-matrix picture: a band is equivalent to its sequence of
 * n+k+1 coefficient tuples, so the search runs over integer tuple sequences
 * with entries in [0, bound], growing each of the n+k+1 rows in lock-step
 * and discarding a branch the moment any row value breaks the required
 * band/border/zero structure or the partial matrix product can no longer
 * close up to (-1)^(k-1) I.  Every surviving sequence is rebuilt in exact
 * rational arithmetic and re-checked from scratch before it is counted.
 *
 * Counts are reported per pattern (cell-by-cell equality) and per shift
 * class (band rows identified up to rotation).  The tuple bound is a search
 * radius, not part of the definition: counts are only trusted once two
 * consecutive bounds of a sweep agree.
 */

struct BoundRun {
    long long bound = 0;
    unsigned long long accepted = 0;      // accepted tuple sequences
    std::vector<FriezePattern> patterns;  // distinct patterns, canonical order
    unsigned long long shift_classes = 0;
    bool completed = false;  // false = clock ran out mid-search
    unsigned long long nodes = 0;
};

BoundRun enumerate_at_bound(long k, long n, long long bound, double budget_seconds = 1e18);

struct SweepEntry {
    long long bound = 0;
    unsigned long long patterns = 0;
    unsigned long long shift_classes = 0;
    bool completed = false;
};

struct EnumerationResult {
    std::vector<SweepEntry> sweep;
    bool stabilized = false;        // two consecutive completed bounds agreed
    bool budget_exhausted = false;  // a run was cut short; its entry is not trusted
    std::optional<unsigned long long> pattern_count;      // only when stabilized
    std::optional<unsigned long long> shift_class_count;  // only when stabilized
    std::string note;  // counting conventions, incl. the height-labeling caveat
};

// Walks the schedule in order, stopping early once two consecutive completed
// bounds report the same pattern count or the time budget runs out.
EnumerationResult enumerate_friezes(long k, long n, const std::vector<long long>& bound_schedule,
                                    double budget_seconds);

std::string enumeration_convention_note();

}  // namespace frieze

#endif  // FRIEZE_ENUMERATE_HPP
