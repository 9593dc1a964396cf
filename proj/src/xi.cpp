#include "frieze/xi.hpp"

#include <algorithm>
#include <string>

#include "frieze/errors.hpp"

namespace frieze {

namespace {

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// sign (-1)^e without pow
int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

ExactMatrix xi_matrix(const std::vector<Rational>& tuple, long k) {
    if (static_cast<long>(tuple.size()) != k - 1)
        throw ArityMismatch("xi_matrix: tuple of arity " + std::to_string(tuple.size()) +
                            " for k = " + std::to_string(k));
    ExactMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (long r = 1; r < k; ++r) m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r - 1)) = Rational(1);
    m.at(0, static_cast<std::size_t>(k - 1)) = Rational(neg_one_pow(k + 1));
    for (long r = 1; r < k; ++r)
        m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(k - 1)) =
            Rational(neg_one_pow(k - 1 - r)) * tuple[static_cast<std::size_t>(r - 1)];
    return m;
}

ExactMatrix xi_product(const XiSequence& s) {
    ExactMatrix prod = ExactMatrix::identity(static_cast<std::size_t>(s.k));
    for (const auto& t : s.tuples) prod = prod * xi_matrix(t, s.k);
    return prod;
}

XiSequence extract_xi(const FriezePattern& f) {
    if (!f.is_periodic()) throw ShapeMismatch("extract_xi needs a periodic pattern");
    const long k = f.k();
    const long N = f.glide_period();
    const long m = f.minimal_period().value_or(f.row_count());
    const long probes = std::min<long>(3, m);

    XiSequence seq;
    seq.k = k;
    seq.n = f.n();

    for (long j = 1; j <= N; ++j) {
        ExactMatrix b(0, 0);
        for (long i = 1; i <= probes; ++i) {
            ExactMatrix window = f.window_matrix(i, j, k);
            auto inv = inverse_exact(window);
            if (!inv)
                throw NonInvertibleWindow("window at (" + std::to_string(i) + ", " +
                                          std::to_string(j) + ") is singular");
            ExactMatrix candidate = *inv * f.window_matrix(i, j + 1, k);
            if (i == 1) {
                b = candidate;
            } else if (!(candidate == b)) {
                throw WildInput("transfer matrix at column " + std::to_string(j) +
                                " differs between rows 1 and " + std::to_string(i));
            }
        }
        // read the tuple off the last column, then insist the whole matrix
        // has the xi shape by rebuilding it
        std::vector<Rational> tuple;
        for (long r = 1; r < k; ++r)
            tuple.push_back(Rational(neg_one_pow(k - 1 - r)) *
                            b.at(static_cast<std::size_t>(r), static_cast<std::size_t>(k - 1)));
        if (!(xi_matrix(tuple, k) == b))
            throw WildInput("transfer matrix at column " + std::to_string(j) +
                            " is not of xi shape");
        seq.tuples.push_back(std::move(tuple));
    }

    // holds automatically for a periodic SL_k pattern; kept as a hard check
    ExactMatrix want = ExactMatrix::identity(static_cast<std::size_t>(k));
    if (f.epsilon() < 0)
        for (long r = 0; r < k; ++r)
            want.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r)) = Rational(-1);
    if (!(xi_product(seq) == want)) throw WildInput("extracted sequence fails the product identity");
    return seq;
}

FriezePattern reconstruct(const XiSequence& s) {
    const long k = s.k;
    const long N = s.period();
    if (static_cast<long>(s.tuples.size()) != N)
        throw ShapeMismatch("sequence needs " + std::to_string(N) + " tuples, has " +
                            std::to_string(s.tuples.size()));
    for (const auto& t : s.tuples)
        if (static_cast<long>(t.size()) != k - 1)
            throw ArityMismatch("tuple of arity " + std::to_string(t.size()) + " for k = " +
                                std::to_string(k));

    ExactMatrix prod = xi_product(s);
    ExactMatrix want = ExactMatrix::identity(static_cast<std::size_t>(k));
    const int eps = neg_one_pow(k - 1);
    if (eps < 0)
        for (long r = 0; r < k; ++r)
            want.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r)) = Rational(-1);
    if (!(prod == want))
        throw NonClosing("product of the xi matrices is not " +
                         std::string(eps < 0 ? "-I" : "+I"));

    auto coeff = [&](long j) -> const std::vector<Rational>& {
        return s.tuples[static_cast<std::size_t>(mod_pos(j - 1, N))];
    };

    // Generate 2N rows so the vertical period is observed, not assumed.
    std::vector<std::vector<Rational>> bands;
    for (long i = 1; i <= 2 * N; ++i) {
        // columns i-k .. i+n+k-1 of row i, seeded with the left border
        std::vector<Rational> row(static_cast<std::size_t>(s.n + 2 * k), Rational(0));
        row[static_cast<std::size_t>(k - 1)] = Rational(1);  // column i-1
        for (long j = i - k; j + k <= i + s.n + k - 1; ++j) {
            const auto& c = coeff(j);
            Rational v = Rational(eps) * row[static_cast<std::size_t>(j - (i - k))];
            for (long r = 1; r < k; ++r)
                v += Rational(neg_one_pow(k - 1 - r)) * c[static_cast<std::size_t>(r - 1)] *
                     row[static_cast<std::size_t>(j + r - (i - k))];
            row[static_cast<std::size_t>(j + k - (i - k))] = v;
        }
        // the right border must close: 1 at column i+n, zeros after it
        if (row[static_cast<std::size_t>(k + s.n)] != Rational(1))
            throw NonClosing("row " + std::to_string(i) + " does not close with border 1");
        for (long t = 1; t < k; ++t)
            if (!row[static_cast<std::size_t>(k + s.n + t)].is_zero())
                throw NonClosing("row " + std::to_string(i) + " has a nonzero beyond the border");
        bands.emplace_back(row.begin() + k, row.begin() + k + s.n);
    }

    for (long i = 0; i < N; ++i)
        if (bands[static_cast<std::size_t>(i)] != bands[static_cast<std::size_t>(i + N)])
            throw NonClosing("generated rows do not repeat with the expected period");

    FriezePattern full = FriezePattern::periodic(k, s.n,
        std::vector<std::vector<Rational>>(bands.begin(), bands.begin() + N));
    long p = full.minimal_period().value_or(N);
    return FriezePattern::periodic(k, s.n,
        std::vector<std::vector<Rational>>(bands.begin(), bands.begin() + p));
}

}  // namespace frieze
