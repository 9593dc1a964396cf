#include "frieze/pattern.hpp"

#include <numeric>

#include "frieze/errors.hpp"

namespace frieze {

namespace {

// Floor division/modulo for possibly negative d.
long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

FriezePattern::FriezePattern(long k, long n, std::vector<std::vector<Rational>> band_rows,
                             bool periodic, long first_row)
    : k_(k), n_(n), bands_(std::move(band_rows)), periodic_(periodic), first_row_(first_row) {
    if (k_ < 2) throw ShapeMismatch("k must be >= 2, got " + std::to_string(k_));
    if (n_ < 1) throw ShapeMismatch("height must be >= 1, got " + std::to_string(n_));
    if (bands_.empty()) throw ShapeMismatch("no band rows");
    for (const auto& row : bands_)
        if (static_cast<long>(row.size()) != n_)
            throw ShapeMismatch("band row of length " + std::to_string(row.size()) +
                                ", expected " + std::to_string(n_));
}

FriezePattern FriezePattern::periodic(long k, long n, std::vector<std::vector<Rational>> band_rows) {
    return FriezePattern(k, n, std::move(band_rows), true, 1);
}

FriezePattern FriezePattern::window(long k, long n, std::vector<std::vector<Rational>> band_rows,
                                    long first_row) {
    return FriezePattern(k, n, std::move(band_rows), false, first_row);
}

const std::vector<Rational>& FriezePattern::band_row(long i) const {
    if (periodic_) {
        long m = row_count();
        return bands_[static_cast<std::size_t>(i - 1 - floor_div(i - 1, m) * m)];
    }
    if (!row_resolvable(i))
        throw RowOutOfRange("row " + std::to_string(i) + " outside window [" +
                            std::to_string(first_row_) + ", " + std::to_string(last_row()) + "]");
    return bands_[static_cast<std::size_t>(i - first_row_)];
}

Rational FriezePattern::entry(long i, long j) const {
    const std::vector<Rational>& band = band_row(i);
    const long N = glide_period();
    const long d = j - (i - 1);
    const long q = floor_div(d, N);
    const long r = d - q * N;  // 0 <= r <= n+k
    Rational v;
    if (r == 0 || r == n_ + 1) {
        v = 1;
    } else if (r >= 1 && r <= n_) {
        v = band[static_cast<std::size_t>(r - 1)];
    } else {
        return Rational(0);
    }
    // glide sign eps^q with eps = (-1)^(k-1)
    if (k_ % 2 == 0 && (q % 2 != 0)) v = -v;
    return v;
}

ExactMatrix FriezePattern::window_matrix(long i, long j, long size) const {
    ExactMatrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
    for (long r = 0; r < size; ++r)
        for (long c = 0; c < size; ++c)
            m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = entry(i + r, j + c);
    return m;
}

Rational FriezePattern::minor_det(long i, long j, long size) const {
    return det_exact(window_matrix(i, j, size));
}

std::optional<long> FriezePattern::minimal_period() const {
    const long m = row_count();
    if (periodic_) {
        for (long p = 1; p <= m; ++p) {
            if (m % p != 0) continue;
            bool ok = true;
            for (long i = 0; i < m && ok; ++i)
                ok = bands_[static_cast<std::size_t>(i)] ==
                     bands_[static_cast<std::size_t>((i + p) % m)];
            if (ok) return p;
        }
        return m;  // unreachable: p == m always matches
    }
    for (long p = 1; p < m; ++p) {
        bool ok = true;
        for (long i = 0; i + p < m && ok; ++i)
            ok = bands_[static_cast<std::size_t>(i)] == bands_[static_cast<std::size_t>(i + p)];
        if (ok) return p;
    }
    return std::nullopt;
}

bool FriezePattern::equal_as_pattern(const FriezePattern& other) const {
    if (k_ != other.k_ || n_ != other.n_) return false;
    if (periodic_ && other.periodic_) {
        long span = std::lcm(row_count(), other.row_count());
        for (long i = 1; i <= span; ++i)
            if (band_row(i) != other.band_row(i)) return false;
        return true;
    }
    if (!periodic_ && !other.periodic_)
        return first_row_ == other.first_row_ && bands_ == other.bands_;
    return false;
}

FriezePattern from_printed_grid(long k, long n, const std::vector<std::vector<long long>>& grid,
                                long first_col, bool periodic_rows, long first_row) {
    if (grid.empty()) throw ParseError("empty printed grid");
    const std::size_t width = grid.front().size();
    for (const auto& row : grid)
        if (row.size() != width) throw ParseError("ragged printed grid");
    const long L = static_cast<long>(width);
    const long N = n + k + 1;
    const int eps = (k % 2 == 0) ? -1 : 1;

    std::vector<std::vector<Rational>> bands;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        const long i = first_row + static_cast<long>(r);
        std::vector<Rational> band;
        for (long t = 1; t <= n; ++t) {
            long col = (i - 1) + t;
            // hunt for a printed column equal to col modulo the glide period
            long pos = col - first_col;
            int sign = 1;
            while (pos >= L) { pos -= N; sign *= eps; }
            while (pos < 0) { pos += N; sign *= eps; }
            if (pos >= L)
                throw ParseError("band entry of row " + std::to_string(i) + " not in excerpt");
            long long raw = grid[r][static_cast<std::size_t>(pos)];
            band.emplace_back(sign < 0 ? -raw : raw);
        }
        bands.push_back(std::move(band));
    }

    FriezePattern pat = periodic_rows ? FriezePattern::periodic(k, n, std::move(bands))
                                      : FriezePattern::window(k, n, std::move(bands), first_row);

    // Re-render the full excerpt; this is what catches transcription slips.
    for (std::size_t r = 0; r < grid.size(); ++r)
        for (long p = 0; p < L; ++p) {
            Rational want(grid[r][static_cast<std::size_t>(p)]);
            Rational got = pat.entry(first_row + static_cast<long>(r), first_col + p);
            if (want != got)
                throw ParseError("printed grid mismatch at row " +
                                 std::to_string(first_row + static_cast<long>(r)) + ", column " +
                                 std::to_string(first_col + p) + ": excerpt has " +
                                 want.to_string() + ", layout gives " + got.to_string());
        }
    return pat;
}

}  // namespace frieze
