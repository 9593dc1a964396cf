#include "frieze/classify.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

#include "frieze/errors.hpp"
#include "frieze/matrix.hpp"

namespace frieze {

namespace {

// Rows whose k x k (or s x s) windows are fully determined.
// Periodic mode: one vertical period.  Window mode: whatever fits.
std::pair<long, long> scan_rows(const FriezePattern& f, long size) {
    if (f.is_periodic()) return {1, f.row_count()};
    return {f.first_row(), f.last_row() - size + 1};
}

long checking_j_lo(const FriezePattern& f, long i) { return i - f.k(); }
long checking_j_hi(const FriezePattern& f, long i) { return i + f.n() + 1; }

BigInt random_prime(std::mt19937_64& rng) {
    // ~40-bit primes; large enough that a nonzero minor polynomial of the
    // sizes we meet essentially never vanishes at a random point.
    for (;;) {
        unsigned long long x = rng() % (1ULL << 40);
        x |= (1ULL << 39) | 1ULL;
        if (boost::multiprecision::miller_rabin_test(BigInt(x), 25)) return BigInt(x);
    }
}

FriezePattern random_surrogate(const FriezePattern& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rational>> bands;
    bands.reserve(static_cast<std::size_t>(f.row_count()));
    for (long r = 0; r < f.row_count(); ++r) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(f.n()));
        for (long t = 0; t < f.n(); ++t) row.emplace_back(random_prime(rng));
        bands.push_back(std::move(row));
    }
    return f.is_periodic() ? FriezePattern::periodic(f.k(), f.n(), std::move(bands))
                           : FriezePattern::window(f.k(), f.n(), std::move(bands), f.first_row());
}

/*
 * Decides whether the s x s minor at (i, j) vanishes for *structural*
 * reasons, i.e. stays zero no matter what the band entries are (because the
 * window overlaps the forced zero/one wedges of the layout).  We do not do
 * symbolic algebra; instead the minor is evaluated on two surrogate patterns
 * whose band entries are independent random large primes.  A minor that is
 * not identically zero vanishes at such a point with negligible probability,
 * and two independent trials square that.  Results are cached per row class
 * and diagonal offset, which is all the position dependence the layout has.
 */
class StructuralZeroOracle {
  public:
    explicit StructuralZeroOracle(const FriezePattern& f)
        : f_(f), s1_(random_surrogate(f, 0x5eedbeefULL)), s2_(random_surrogate(f, 0xfeedc0deULL)) {}

    bool is_structural_zero(long i, long j, long size) const {
        long row_class = f_.is_periodic() ? (i - 1) % f_.row_count() : i;
        long d = j - (i - 1);
        long N = f_.glide_period();
        d -= (d / N) * N;
        if (d < 0) d += N;
        auto key = std::make_tuple(row_class, d, size);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        bool z = s1_.minor_det(i, j, size).is_zero() && s2_.minor_det(i, j, size).is_zero();
        cache_.emplace(key, z);
        return z;
    }

  private:
    const FriezePattern& f_;
    FriezePattern s1_, s2_;
    mutable std::map<std::tuple<long, long, long>, bool> cache_;
};

}  // namespace

VerifyReport verify_slk(const FriezePattern& f) {
    auto [lo, hi] = scan_rows(f, f.k());
    return verify_slk(f, lo, hi);
}

VerifyReport verify_slk(const FriezePattern& f, long row_begin, long row_end) {
    if (row_begin <= row_end)
        for (long i = row_begin; i <= row_end + f.k() - 1; ++i)
            if (!f.row_resolvable(i))
                throw RowOutOfRange("verify_slk: row " + std::to_string(i) + " not resolvable");
    VerifyReport report;
    for (long i = row_begin; i <= row_end; ++i)
        for (long j = checking_j_lo(f, i); j <= checking_j_hi(f, i); ++j) {
            Rational d = f.minor_det(i, j, f.k());
            if (d != Rational(1)) report.failures.push_back({Position{i, j}, d});
        }
    return report;
}

Rational sylvester_residual(const FriezePattern& f, long i, long j, long ell) {
    if (ell < 1) throw ShapeMismatch("sylvester_residual needs ell >= 1");
    Rational lhs = f.minor_det(i, j, ell + 1) * f.minor_det(i + 1, j + 1, ell - 1);
    Rational rhs = f.minor_det(i, j, ell) * f.minor_det(i + 1, j + 1, ell) -
                   f.minor_det(i + 1, j, ell) * f.minor_det(i, j + 1, ell);
    return lhs - rhs;
}

ClassificationReport classify(const FriezePattern& f) {
    ClassificationReport rep;
    std::vector<Witness> w;

    // SL_k property
    {
        VerifyReport v = verify_slk(f);
        rep.is_slk = v.ok();
        for (const auto& fail : v.failures) w.push_back({"is_slk", fail.at, fail.det});
    }

    // entry-wise band flags
    rep.integral = rep.nonzero = rep.positive = true;
    {
        auto [lo, hi] = scan_rows(f, 1);
        for (long i = lo; i <= hi; ++i) {
            const auto& band = f.band_row(i);
            for (long t = 1; t <= f.n(); ++t) {
                const Rational& v = band[static_cast<std::size_t>(t - 1)];
                Position at{i, i - 1 + t};
                if (!v.is_integer()) {
                    rep.integral = false;
                    w.push_back({"integral", at, v});
                }
                if (v.is_zero()) {
                    rep.nonzero = false;
                    w.push_back({"nonzero", at, v});
                }
                if (v.sign() <= 0) {
                    rep.positive = false;
                    w.push_back({"positive", at, v});
                }
            }
        }
    }

    rep.period = f.minimal_period();

    // generic: every (k-1)-minor that is not structurally zero must be nonzero
    {
        StructuralZeroOracle oracle(f);
        rep.generic = true;
        auto [lo, hi] = scan_rows(f, f.k() - 1);
        for (long i = lo; i <= hi; ++i)
            for (long j = checking_j_lo(f, i); j <= checking_j_hi(f, i); ++j) {
                if (oracle.is_structural_zero(i, j, f.k() - 1)) continue;
                Rational d = f.minor_det(i, j, f.k() - 1);
                if (d.is_zero()) {
                    rep.generic = false;
                    w.push_back({"generic", Position{i, j}, d});
                }
            }
    }

    // tame: all (k+1)-minors vanish (and the pattern is SL_k to begin with)
    {
        bool big_minors_vanish = true;
        auto [lo, hi] = scan_rows(f, f.k() + 1);
        for (long i = lo; i <= hi; ++i)
            for (long j = checking_j_lo(f, i); j <= checking_j_hi(f, i); ++j) {
                Rational d = f.minor_det(i, j, f.k() + 1);
                if (!d.is_zero()) {
                    big_minors_vanish = false;
                    w.push_back({"tame", Position{i, j}, d});
                }
            }
        rep.tame = rep.is_slk && big_minors_vanish;
        rep.wild = !rep.tame;
    }

    std::sort(w.begin(), w.end(), [](const Witness& a, const Witness& b) {
        return std::tie(a.property, a.at.i, a.at.j) < std::tie(b.property, b.at.i, b.at.j);
    });
    rep.witnesses = std::move(w);
    return rep;
}

DualArray dual(const FriezePattern& f) {
    DualArray out;
    auto [lo, hi] = scan_rows(f, f.k() - 1);
    out.first_row = lo;
    out.col_offset = -f.k();
    for (long i = lo; i <= hi; ++i) {
        std::vector<Rational> row;
        for (long j = checking_j_lo(f, i); j <= checking_j_hi(f, i); ++j)
            row.push_back(f.minor_det(i, j, f.k() - 1));
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::optional<std::pair<long, long>> locate_dual_offset(const FriezePattern& f) {
    if (!f.is_periodic())
        throw ShapeMismatch("locate_dual_offset needs a periodic pattern");
    const long N = f.glide_period();
    const long span = std::lcm(f.row_count(), N);

    // minors over a span tall enough to expose the full symmetry
    std::map<std::pair<long, long>, Rational> minors;
    for (long i = 1; i <= span; ++i)
        for (long j = checking_j_lo(f, i); j <= checking_j_hi(f, i); ++j)
            minors[{i, j}] = f.minor_det(i, j, f.k() - 1);

    std::vector<std::pair<long, long>> candidates;
    for (long s = -N; s <= N; ++s)
        for (long t = -N; t <= N; ++t) candidates.emplace_back(s, t);
    std::sort(candidates.begin(), candidates.end(),
              [](const std::pair<long, long>& a, const std::pair<long, long>& b) {
                  long wa = std::abs(a.first) + std::abs(a.second);
                  long wb = std::abs(b.first) + std::abs(b.second);
                  return std::tie(wa, a.first, a.second) < std::tie(wb, b.first, b.second);
              });

    for (auto [s, t] : candidates) {
        bool match = true;
        for (const auto& [pos, val] : minors) {
            if (val != f.entry(pos.second + t, pos.first + s)) {
                match = false;
                break;
            }
        }
        if (match) return std::make_pair(s, t);
    }
    return std::nullopt;
}

LemmaCheck lemma_check(const FriezePattern& f) {
    LemmaCheck out{true, false};
    for (long ell = 1; ell <= f.k() - 1 && out.hypothesis; ++ell)
        for (long j = 1; j <= f.n(); ++j)
            if (f.minor_det(1, j, ell).sign() <= 0) {
                out.hypothesis = false;
                break;
            }
    out.conclusion = classify(f).generic;
    return out;
}

}  // namespace frieze
