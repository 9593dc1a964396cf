#include "frieze/unbounded.hpp"

#include <sstream>

#include "frieze/errors.hpp"
#include "frieze/fixtures.hpp"

namespace frieze {

BigInt trace_t(long long ell) {
    QuadNumber w = QuadNumber::unit_w();
    QuadNumber t = w.pow(ell) + w.pow(-ell);
    return *t.as_integer();  // conjugate pair, always a rational integer
}

namespace {

QuadNumber eval_terms(const std::vector<FormulaTerm>& terms, long long ell) {
    QuadNumber sum;
    for (const FormulaTerm& t : terms) {
        QuadNumber coeff(Rational(9 * t.alpha + t.beta, t.den), Rational(t.alpha, t.den));
        sum = sum + coeff * QuadNumber::unit_w().pow(static_cast<long long>(t.mult) * ell);
    }
    return sum;
}

}  // namespace

SegmentScheme::SegmentScheme() {
    // a_1 .. a_76; each line is one formula as a list of terms
    // (alpha*w + beta)/den * w^(mult*l).  Formulas 30 and 62 are stored
    // without their constant; it is recovered below.
    formulas_ = {
        /* a1  */ {{40, 13, 63, -1}, {40, -13, 297, 1}},
        /* a2  */ {{40, 113, 3, -2}, {1, 0, 9, 0}, {40, -113, 2037, 2}},
        /* a3  */ {{10, 77, 1, -2}, {5, 0, 106, 0}, {10, -77, 1387, 2}},
        /* a4  */ {{8, 11, 17, -1}, {8, -11, 215, 1}},
        /* a5  */ {{40, 73, 27, -2}, {5, 0, 54, 0}, {40, -73, 1341, 2}},
        /* a6  */ {{40, 31, 5, -2}, {5, 0, 19, 0}, {40, -31, 563, 2}},
        /* a7  */ {{20, 21, 11, -1}, {20, -21, 389, 1}},
        /* a8  */ {{20, 3, 13, -1}, {20, -3, 67, 1}},
        /* a9  */ {{40, 51, 1, -2}, {1, 0, 4, 0}, {40, -51, 919, 2}},
        /* a10 */ {{40, 139, 1, -2}, {5, 0, 47, 0}, {40, -139, 2503, 2}},
        /* a11 */ {{8, 5, 7, -1}, {8, -5, 97, 1}},
        /* a12 */ {{40, 33, 11, -2}, {5, 0, 23, 0}, {40, -33, 605, 2}},
        /* a13 */ {{20, 7, 1, -2}, {5, 0, 8, 0}, {20, -7, 127, 2}},
        /* a14 */ {{40, 19, 9, -1}, {40, -19, 351, 1}},
        /* a15 */ {{8, 3, 1, -1}, {8, -3, 55, 1}},
        /* a16 */ {{40, 41, 11, -1}, {40, -41, 749, 1}},
        /* a17 */ {{4, 1, 7, -1}, {4, -1, 25, 1}},
        /* a18 */ {{8, 1, 3, -1}, {8, -1, 21, 1}},
        /* a19 */ {{20, -1, 49, -1}, {20, 1, 31, 1}},
        /* a20 */ {{40, -3, 167, -1}, {40, 3, 113, 1}},
        /* a21 */ {{40, -1, 109, -1}, {40, 1, 91, 1}},
        /* a22 */ {{10, 5, 13, -2}, {5, 0, 47, 0}, {10, -5, 103, 2}},
        /* a23 */ {{40, 9, 11, -2}, {5, 0, 12, 0}, {40, -9, 173, 2}},
        /* a24 */ {{4, 1, 15, -1}, {4, -1, 33, 1}},
        /* a25 */ {{40, 15, 101, -2}, {5, 0, 66, 0}, {40, -15, 371, 2}},
        /* a26 */ {{10, 7, 43, -2}, {5, 0, 119, 0}, {10, -7, 169, 2}},
        /* a27 */ {{40, 11, 41, -1}, {40, -11, 239, 1}},
        /* a28 */ {{1, 0, 1, -1}, {1, 0, 1, 1}},
        /* a29 */ {{40, 9, 19, -2}, {1, 0, 4, 0}, {40, -9, 181, 2}},
        /* a30 */ {{10, 1, 1, -2}, {10, -1, 19, 2}},
        /* a31 */ {{8, 1, 11, -1}, {8, -1, 29, 1}},
        /* a32 */ {{40, 7, 37, -2}, {1, 0, 5, 0}, {40, -7, 163, 2}},
        /* a33 */ {{40, 13, 63, -2}, {1, 0, 9, 0}, {40, -13, 297, 2}},
        /* a34 */ {{40, -9, 181, -1}, {40, 9, 19, 1}},
        /* a35 */ {{20, -7, 143, -1}, {20, 7, 17, 1}},
        /* a36 */ {{40, 9, 19, -1}, {40, -9, 181, 1}},
        /* a37 */ {{10, 1, 1, -1}, {10, -1, 19, 1}},
        /* a38 */ {{8, 1, 27, -1}, {8, -1, 45, 1}},
        /* a39 */ {{4, 1, 23, -1}, {4, -1, 41, 1}},
        /* a40 */ {{10, -5, 103, -2}, {5, 0, 47, 0}, {10, 5, 13, 2}},
        /* a41 */ {{40, -31, 651, -2}, {5, 0, 82, 0}, {40, 31, 93, 2}},
        /* a42 */ {{40, 1, 91, -1}, {40, -1, 109, 1}},
        /* a43 */ {{40, -11, 239, -1}, {40, 11, 41, 1}},
        /* a44 */ {{40, -3, 223, -2}, {5, 0, 51, 0}, {40, 3, 169, 2}},
        /* a45 */ {{10, -1, 95, -2}, {5, 0, 89, 0}, {10, 1, 77, 2}},
        /* a46 */ {{4, -1, 33, -1}, {4, 1, 15, 1}},
        /* a47 */ {{40, -11, 231, -2}, {5, 0, 27, 0}, {40, 11, 33, 2}},
        /* a48 */ {{40, -17, 365, -2}, {5, 0, 47, 0}, {40, 17, 59, 2}},
        /* a49 */ {{40, 1, 51, -1}, {40, -1, 69, 1}},
        /* a50 */ {{20, -3, 67, -1}, {20, 3, 13, 1}},
        /* a51 */ {{40, -1, 125, -2}, {5, 0, 31, 0}, {40, 1, 107, 2}},
        /* a52 */ {{40, -1, 213, -2}, {5, 0, 54, 0}, {40, 1, 195, 2}},
        /* a53 */ {{8, -1, 37, -1}, {8, 1, 19, 1}},
        /* a54 */ {{4, -1, 25, -1}, {4, 1, 7, 1}},
        /* a55 */ {{8, -3, 79, -1}, {8, 3, 25, 1}},
        /* a56 */ {{8, -3, 55, -1}, {8, 3, 1, 1}},
        /* a57 */ {{20, -17, 313, -1}, {20, 17, 7, 1}},
        /* a58 */ {{40, 7, 37, -1}, {40, -7, 163, 1}},
        /* a59 */ {{40, -7, 131, -2}, {5, 0, 8, 0}, {40, 7, 5, 2}},
        /* a60 */ {{40, -11, 207, -2}, {5, 0, 13, 0}, {40, 11, 9, 2}},
        /* a61 */ {{8, -1, 21, -1}, {8, 1, 3, 1}},
        /* a62 */ {{40, -11, 199, -2}, {40, 11, 1, 2}},
        /* a63 */ {{40, -25, 453, -2}, {5, 0, 13, 0}, {40, 25, 3, 2}},
        /* a64 */ {{40, -1, 29, -1}, {40, 1, 11, 1}},
        /* a65 */ {{10, -1, 19, -1}, {10, 1, 1, 1}},
        /* a66 */ {{40, -23, 443, -2}, {5, 0, 41, 0}, {40, 23, 29, 2}},
        /* a67 */ {{10, -9, 175, -2}, {5, 0, 66, 0}, {10, 9, 13, 2}},
        /* a68 */ {{8, -3, 71, -1}, {8, 3, 17, 1}},
        /* a69 */ {{40, -37, 673, -2}, {1, 0, 4, 0}, {40, 37, 7, 2}},
        /* a70 */ {{10, -21, 383, -2}, {5, 0, 51, 0}, {10, 21, 5, 2}},
        /* a71 */ {{40, -13, 257, -1}, {40, 13, 23, 1}},
        /* a72 */ {{40, -1, 69, -1}, {40, 1, 51, 1}},
        /* a73 */ {{2, -1, 19, -1}, {2, 1, 1, 1}},
        /* a74 */ {{8, -9, 173, -1}, {8, 9, 11, 1}},
        /* a75 */ {{40, -51, 919, -1}, {40, 51, 1, 1}},
        /* a76 */ {{40, -11, 199, -1}, {40, 11, 1, 1}},
    };

    auto F = [](long long v) { return Slot{true, v, 0}; };
    auto A = [](int t) { return Slot{false, 0, t}; };
    slots_ = {
        {F(4), A(1), A(2), A(3), A(4), A(5), A(6), A(7)},
        {A(8), A(9), A(10), A(11), A(12), A(13), A(14), F(1)},
        {A(15), A(16), F(4), A(17), A(18), F(4), A(19), A(20)},
        {F(5), A(21), A(22), A(23), A(24), A(25), A(26), A(27)},
        {A(28), A(29), A(30), A(31), A(32), A(33), A(18), F(1)},
        {A(36), A(37), F(4), A(38), A(39), F(4), A(34), A(35)},
        {F(2), A(43), A(44), A(45), A(46), A(40), A(41), A(42)},
        {A(50), A(51), A(52), A(53), A(47), A(48), A(49), F(1)},
        {A(58), A(1), F(4), A(54), A(55), F(4), A(56), A(57)},
        {F(2), A(65), A(59), A(60), A(61), A(62), A(63), A(64)},
        {A(71), A(66), A(67), A(68), A(69), A(70), A(19), F(8)},
        {A(72), A(21), F(4), A(73), A(74), F(4), A(75), A(76)},
    };

    // Recover the two missing constants from the l = 0 excerpt, then check
    // the completed formulas against the l = 1 excerpt.
    for (int idx : {30, 62}) {
        long row = 0, col = 0;
        for (long r = 1; r <= 12 && row == 0; ++r)
            for (long c = 1; c <= 8; ++c)
                if (!slots_[r - 1][c - 1].fixed && slots_[r - 1][c - 1].formula == idx) {
                    row = r;
                    col = c;
                    break;
                }

        // Band column c of row r sits at printed column r + c - 1 (the
        // excerpts are stored with their left border at column 0).
        long long printed0 = fixtures::segment_grid(0)[row - 1][row + col - 1];
        long long printed1 = fixtures::segment_grid(1)[row - 1][row + col - 1];

        QuadNumber constant = QuadNumber(Rational(printed0)) - eval_terms(formulas_[idx - 1], 0);
        if (!constant.is_rational())
            throw NonIntegralValue("recovered constant for formula " + std::to_string(idx) +
                                   " is irrational: " + constant.to_string());
        Rational c_val = constant.rational_part();
        formulas_[idx - 1].push_back(FormulaTerm{c_val.den().convert_to<long long>(), 0,
                                                 c_val.num().convert_to<long long>(), 0});

        QuadNumber check = eval_terms(formulas_[idx - 1], 1);
        if (check != QuadNumber(Rational(printed1)))
            throw ParseError("formula " + std::to_string(idx) + " with recovered constant " +
                             c_val.to_string() + " gives " + check.to_string() +
                             " at l=1, excerpt has " + std::to_string(printed1));

        (idx == 30 ? c30_ : c62_) = c_val;
    }
}

const SegmentScheme& SegmentScheme::instance() {
    static SegmentScheme scheme;
    return scheme;
}

QuadNumber SegmentScheme::formula_value(int index, long long ell) const {
    return eval_terms(formulas_.at(static_cast<std::size_t>(index) - 1), ell);
}

BigInt SegmentScheme::band_entry(long row, long col, long long ell) const {
    if (row < 1 || row > 12 || col < 1 || col > 8)
        throw RowOutOfRange("segment slot (" + std::to_string(row) + "," + std::to_string(col) +
                            ")");
    const Slot& s = slots_[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(col) - 1];
    if (s.fixed) return BigInt(s.fixed_value);
    QuadNumber v = formula_value(s.formula, ell);
    auto z = v.as_integer();
    if (!z) {
        std::ostringstream os;
        os << "segment entry (" << row << "," << col << ") at l=" << ell << " is "
           << v.to_string();
        throw NonIntegralValue(os.str());
    }
    return *z;
}

FriezePattern SegmentScheme::segment(long long ell) const {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(12);
    for (long r = 1; r <= 12; ++r) {
        std::vector<Rational> row;
        row.reserve(8);
        for (long c = 1; c <= 8; ++c) row.emplace_back(band_entry(r, c, ell));
        rows.push_back(std::move(row));
    }
    return FriezePattern::window(3, 8, std::move(rows), 1);
}

const Rational& SegmentScheme::derived_constant(int index) const {
    if (index == 30) return c30_;
    if (index == 62) return c62_;
    throw RowOutOfRange("derived_constant: only formulas 30 and 62 were repaired");
}

FriezePattern stacked_segments(long long lo, long long hi) {
    if (lo > hi) throw ShapeMismatch("stacked_segments: lo > hi");
    const SegmentScheme& scheme = SegmentScheme::instance();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(hi - lo + 1) * 12);
    for (long long ell = lo; ell <= hi; ++ell) {
        FriezePattern seg = scheme.segment(ell);
        for (const auto& row : seg.band_rows()) rows.push_back(row);
    }
    return FriezePattern::window(3, 8, std::move(rows), 12 * lo + 1);
}

StackReport verify_concatenation(long long lo, long long hi) {
    StackReport rep;
    rep.lo = lo;
    rep.hi = hi;
    FriezePattern stack = stacked_segments(lo, hi);
    VerifyReport vr = verify_slk(stack);
    rep.ok = vr.ok();
    rep.failures = std::move(vr.failures);

    const SegmentScheme& scheme = SegmentScheme::instance();
    for (long long ell = lo; ell <= hi; ++ell) {
        BigInt best = 0;
        for (long r = 1; r <= 12; ++r)
            for (long c = 1; c <= 8; ++c) {
                BigInt v = scheme.band_entry(r, c, ell);
                if (v > best) best = v;
            }
        rep.max_entry.push_back(best);
    }
    return rep;
}

}  // namespace frieze
