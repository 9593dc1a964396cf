// End-to-end acceptance run: ten numbered checks, one [PASS]/[FAIL] line
// each, exit code = number of failures.  Time limits are asserted in code so
// a regression in speed fails the same way a regression in results would.
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frieze/classify.hpp"
#include "frieze/enumerate.hpp"
#include "frieze/errors.hpp"
#include "frieze/extend.hpp"
#include "frieze/fixtures.hpp"
#include "frieze/matrix.hpp"
#include "frieze/unbounded.hpp"
#include "frieze/xi.hpp"

using namespace frieze;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

void report(int idx, bool ok, const std::string& detail) {
    std::printf("[%s] %2d: %s\n", ok ? "PASS" : "FAIL", idx, detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

// ---- 1: the six corpus arrays verify -------------------------------------

void criterion_1() {
    Timer t;
    const FriezePattern segment0 = SegmentScheme::instance().segment(0);
    const std::vector<const FriezePattern*> arrays = {
        &fixtures::nine_periodic_h5(), &fixtures::tame_h4(),  &fixtures::nongeneric_h3(),
        &fixtures::wild_h4(),          &fixtures::cc_h1(),    &segment0,
    };
    bool ok = true;
    for (const FriezePattern* f : arrays) ok = ok && verify_slk(*f).ok();
    const double s = t.seconds();
    report(1, ok && s < 1.0, "all six corpus arrays pass window verification (" + fmt(s) + ")");
}

// ---- 2: classification labels --------------------------------------------

void criterion_2() {
    ClassificationReport tame = classify(fixtures::tame_h4());
    bool ok = tame.tame && tame.generic && tame.positive && tame.integral &&
              tame.period == std::optional<long>(2);

    ClassificationReport ng = classify(fixtures::nongeneric_h3());
    ok = ok && ng.tame && !ng.generic;

    ClassificationReport wild = classify(fixtures::wild_h4());
    ok = ok && wild.wild && wild.positive && wild.integral &&
         wild.period == std::optional<long>(2);

    ClassificationReport cc = classify(fixtures::cc_h1());
    ok = ok && cc.tame && cc.generic && cc.period.has_value();

    // The nine-periodic array: valid, and the 4x4-minor oracle decides
    // tame/wild.  It comes out tame, which is recorded here as the result.
    ClassificationReport nine = classify(fixtures::nine_periodic_h5());
    ok = ok && nine.is_slk && (nine.tame != nine.wild);
    report(2, ok, std::string("classification labels as expected; nine-periodic array: ") +
                      (nine.tame ? "tame" : "wild") + " by the 4x4-minor oracle");
}

// ---- 3: coefficient matrices ---------------------------------------------

void criterion_3() {
    Timer t;
    XiSequence s = extract_xi(fixtures::tame_h4());
    bool ok = s.k == 3 && static_cast<long>(s.tuples.size()) == 8;
    for (const auto& tup : s.tuples) ok = ok && tup.size() == 2;

    // One tuple per column drives every row: the reconstruction from the
    // tuples alone reproduces the band over its whole period.
    ok = ok && reconstruct(s).equal_as_pattern(fixtures::tame_h4());

    // Explicit row-independence of the recurrence across a 3 x 8 patch.
    const FriezePattern& f = fixtures::tame_h4();
    for (long i = 1; ok && i <= 3; ++i)
        for (long j = 1; j <= 8; ++j) {
            const auto& c = s.tuples[static_cast<std::size_t>((j - 1) % 8)];
            Rational rhs = f.entry(i, j) - c[0] * f.entry(i, j + 1) + c[1] * f.entry(i, j + 2);
            ok = ok && f.entry(i, j + 3) == rhs;
        }

    ok = ok && xi_product(s) == ExactMatrix::identity(3);

    XiSequence cc = extract_xi(fixtures::cc_h1());
    ExactMatrix minus = ExactMatrix::identity(2);
    minus.at(0, 0) = Rational(-1);
    minus.at(1, 1) = Rational(-1);
    ok = ok && xi_product(cc) == minus;
    ok = ok && reconstruct(cc).equal_as_pattern(fixtures::cc_h1());

    const double sec = t.seconds();
    report(3, ok && sec < 1.0,
           "coefficient tuples: shape, row-independence, closing products +I/-I, and "
           "round-trips (" + fmt(sec) + ")");
}

// ---- 4: determinant identity on random arrays ----------------------------

void criterion_4() {
    Timer t;
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long long> d(-9, 9);
    bool ok = true;
    for (int trial = 0; ok && trial < 1000; ++trial) {
        std::vector<std::vector<Rational>> rows;
        for (int r = 0; r < 6; ++r) {
            std::vector<Rational> row;
            for (int c = 0; c < 6; ++c) row.emplace_back(d(rng));
            rows.push_back(std::move(row));
        }
        FriezePattern f = FriezePattern::periodic(3, 6, std::move(rows));
        for (long ell = 1; ell <= 4; ++ell)
            for (long j = 0; j <= 2; ++j)
                ok = ok && sylvester_residual(f, 1, j, ell).is_zero();
    }
    const double s = t.seconds();
    report(4, ok && s < 30.0,
           "determinant identity residual is 0 for l=1..4 on 1000 random 6x6 integer "
           "arrays (" + fmt(s) + ")");
}

// ---- 5: adjacent-minor arrays and their offsets --------------------------

void criterion_5() {
    auto tame = locate_dual_offset(fixtures::tame_h4());
    auto cc = locate_dual_offset(fixtures::cc_h1());
    auto nine = locate_dual_offset(fixtures::nine_periodic_h5());
    bool ok = tame.has_value() && cc.has_value() && nine.has_value();
    ok = ok && nine == std::make_optional(std::make_pair(-2L, 3L));

    DualArray ng = dual(fixtures::nongeneric_h3());
    bool has_zero = false;
    for (const auto& row : ng.rows)
        for (const Rational& e : row) has_zero = has_zero || e.is_zero();
    ok = ok && has_zero;

    std::string detail = "minor arrays match a translate of the source on the tame fixtures";
    if (nine) detail += " (nine-periodic offset (" + std::to_string(nine->first) + ", " +
                        std::to_string(nine->second) + "))";
    detail += "; the non-generic minor array contains a zero";
    report(5, ok, detail);
}

// ---- 6: positivity criterion ---------------------------------------------

void criterion_6() {
    bool ok = true;
    for (const FriezePattern* f :
         {&fixtures::nine_periodic_h5(), &fixtures::tame_h4(), &fixtures::nongeneric_h3(),
          &fixtures::wild_h4(), &fixtures::cc_h1()}) {
        LemmaCheck lc = lemma_check(*f);
        if (lc.hypothesis) ok = ok && lc.conclusion;
    }

    // Random rational friezes, built row by row through the forced
    // continuation so each one is valid by construction.
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long long> num(1, 9), den(1, 4);
    int accepted = 0, attempts = 0;
    while (accepted < 100 && attempts < 4000) {
        ++attempts;
        std::vector<std::vector<Rational>> rows;
        for (int r = 0; r < 2; ++r) {
            std::vector<Rational> row;
            for (int c = 0; c < 3; ++c) row.push_back(Rational(num(rng), den(rng)));
            rows.push_back(std::move(row));
        }
        bool valid = true;
        for (int step = 0; valid && step < 6; ++step) {
            std::vector<std::vector<Rational>> last(rows.end() - 2, rows.end());
            ContinuationResult res = continue_row(last, ExactRational{});
            if (res.kind != ContinuationResult::Kind::Unique)
                valid = false;
            else
                rows.push_back(std::move(res.unique_row));
        }
        if (!valid) continue;
        FriezePattern f = FriezePattern::window(3, 3, rows, 1);
        LemmaCheck lc = lemma_check(f);
        if (!lc.hypothesis) continue;
        ++accepted;
        ok = ok && lc.conclusion;
    }
    ok = ok && accepted == 100;
    report(6, ok, "positive-minor hypothesis implies genericity on fixtures and " +
                      std::to_string(accepted) + " random rational friezes");
}

// ---- 7: successor graph and an aperiodic walk ----------------------------

void criterion_7() {
    Timer t;
    std::vector<GammaVertex> seeds;
    for (const FriezePattern& p : fixtures::seed_pieces()) {
        GammaVertex v;
        for (const auto& row : p.band_rows()) {
            std::vector<long long> r;
            for (const Rational& e : row) r.push_back(e.as_integer()->convert_to<long long>());
            v.rows.push_back(std::move(r));
        }
        seeds.push_back(std::move(v));
    }
    GammaSubgraph g = build_subgraph(seeds, 4, 12, 64);
    bool ok = g.vertices.size() == 12 && !g.edges.empty();

    GraphAnalysis a = analyze(g);
    ok = ok && a.cycles.size() >= 2;

    // Two cycles through a shared vertex, alternated by an aperiodic word.
    std::size_t ca = 0, cb = 0;
    bool found = false;
    for (std::size_t i = 0; !found && i < a.cycles.size(); ++i)
        for (std::size_t j = i + 1; !found && j < a.cycles.size(); ++j)
            for (long v : a.cycles[i])
                if (std::find(a.cycles[j].begin(), a.cycles[j].end(), v) != a.cycles[j].end()) {
                    ca = i;
                    cb = j;
                    found = true;
                    break;
                }
    ok = ok && found;

    bool verified = false, aperiodic = false;
    if (ok) {
        std::vector<long> word = two_loop_walk(g, a.cycles[ca], a.cycles[cb], 10000);
        FriezePattern f = walk_frieze(g, word);
        verified = f.row_count() >= 10000 && verify_slk(f).ok();
        aperiodic = !vertical_period_bounded(f, 1000).has_value();
    }
    const double s = t.seconds();
    ok = ok && verified && aperiodic && s < 120.0;
    report(7, ok,
           "12-piece graph: " + std::to_string(g.edges.size()) + " edges, " +
               std::to_string(a.cycles.size()) +
               " cycles; 10000-row alternating walk verifies with no vertical period <= 1000 "
               "(" + fmt(s) + ")");
}

// ---- 8: censuses ----------------------------------------------------------

void criterion_8() {
    Timer t;
    const double budget = 600.0;
    EnumerationResult w1 = enumerate_friezes(3, 1, {8, 16}, budget);
    EnumerationResult w2 = enumerate_friezes(3, 2, {8, 16}, budget);
    EnumerationResult w3 = enumerate_friezes(3, 3, {16, 24}, budget);
    bool ok = w1.stabilized && w1.pattern_count == std::optional<unsigned long long>(5);
    ok = ok && w2.stabilized && w2.pattern_count == std::optional<unsigned long long>(51);
    ok = ok && w3.stabilized && w3.pattern_count == std::optional<unsigned long long>(868);

    // The width-4 count is attempted under a small declared budget and
    // reported either way; it is not required for the pass.
    EnumerationResult w4 = enumerate_friezes(3, 4, {8}, 60.0);
    std::string w4_text;
    if (w4.budget_exhausted)
        w4_text = "width-4 attempt: budget exhausted (reported, optional)";
    else if (!w4.sweep.empty())
        w4_text = "width-4 attempt at bound 8: " + std::to_string(w4.sweep.back().patterns) +
                  " patterns, single bound, not stabilized";

    const double s = t.seconds();
    ok = ok && s < 600.0;
    report(8, ok,
           "censuses stabilize at 5 / 51 / 868 patterns for widths 1-3 (" + fmt(s) + "); " +
               w4_text);
    std::printf("      note: %s\n", enumeration_convention_note().c_str());
}

// ---- 9: quadratic-field segments -----------------------------------------

void criterion_9() {
    Timer t;
    const SegmentScheme& scheme = SegmentScheme::instance();
    bool ok = scheme.derived_constant(30) == Rational(1) &&
              scheme.derived_constant(62) == Rational(1);

    {
        const FriezePattern s0 = scheme.segment(0);
        const FriezePattern s1 = scheme.segment(1);
        ok = ok && s0.equal_as_pattern(fixtures::segment_excerpt(0));
        ok = ok && s1.equal_as_pattern(fixtures::segment_excerpt(1));
    }

    for (long long ell = -10; ok && ell <= 10; ++ell) {
        const FriezePattern seg = scheme.segment(ell);
        for (const auto& row : seg.band_rows())
            for (const Rational& e : row) ok = ok && e.is_integer() && e > Rational(0);
    }

    StackReport stack = verify_concatenation(-3, 3);
    ok = ok && stack.ok;

    StackReport wide = verify_concatenation(-5, 5);
    ok = ok && wide.ok;
    for (std::size_t i = 0; i + 1 < wide.max_entry.size(); ++i) {
        const long long ell = wide.lo + static_cast<long long>(i);
        if (ell < 0) ok = ok && wide.max_entry[i] > wide.max_entry[i + 1];
        if (ell >= 0) ok = ok && wide.max_entry[i] < wide.max_entry[i + 1];
    }

    for (long long ell = -9; ok && ell <= 9; ++ell)
        ok = ok && trace_t(ell + 1) == 18 * trace_t(ell) - trace_t(ell - 1);

    const double s = t.seconds();
    ok = ok && s < 60.0;
    report(9, ok,
           "segment family: excerpts match, segments integral and positive for |l|<=10, "
           "stacks verify across seams, growth strictly increases away from 0, trace "
           "recurrence holds; repaired constants recovered by the excerpt-match oracle "
           "(" + fmt(s) + ")");
}

// ---- 10: two determinant algorithms agree --------------------------------

Rational det_cofactor(const ExactMatrix& m, std::vector<std::size_t> cols, std::size_t row) {
    if (cols.empty()) return Rational(1);
    Rational acc(0);
    for (std::size_t pick = 0; pick < cols.size(); ++pick) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (i != pick) rest.push_back(cols[i]);
        Rational term = m.at(row, cols[pick]) * det_cofactor(m, rest, row + 1);
        acc += (pick % 2 == 0) ? term : -term;
    }
    return acc;
}

void criterion_10() {
    Timer t;
    std::mt19937_64 rng(1009);
    std::uniform_int_distribution<long long> d(-9, 9);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    bool ok = true;
    for (int trial = 0; ok && trial < 1000; ++trial) {
        const std::size_t n = dim(rng);
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rational(d(rng));
        std::vector<std::size_t> cols(n);
        for (std::size_t i = 0; i < n; ++i) cols[i] = i;
        ok = ok && det_exact(m) == det_cofactor(m, cols, 0);
    }
    const double s = t.seconds();
    report(10, ok,
           "fraction-free elimination matches cofactor expansion on 1000 random matrices "
           "up to 5x5 (" + fmt(s) + ")");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0)
        std::printf("acceptance: all 10 criteria hold\n");
    else
        std::printf("acceptance: %d criterion/criteria FAILED\n", g_failures);
    return g_failures;
}
