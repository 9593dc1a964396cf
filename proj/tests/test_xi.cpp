#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frieze/classify.hpp"
#include "frieze/errors.hpp"
#include "frieze/fixtures.hpp"
#include "frieze/xi.hpp"

using namespace frieze;

namespace {

Rational R(long long v) { return Rational(v); }

ExactMatrix lit(std::vector<std::vector<long long>> rows) {
    ExactMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Rational(rows[r][c]);
    return m;
}

}  // namespace

TEST_CASE("xi matrix shapes") {
    CHECK(xi_matrix({R(5)}, 2) == lit({{0, -1}, {1, 5}}));
    CHECK(xi_matrix({R(2), R(3)}, 3) == lit({{0, 0, 1}, {1, 0, -2}, {0, 1, 3}}));
    CHECK(xi_matrix({R(0), R(0)}, 3) == lit({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
    CHECK(xi_matrix({R(1), R(2), R(3)}, 4) ==
          lit({{0, 0, 0, -1}, {1, 0, 0, 1}, {0, 1, 0, -2}, {0, 0, 1, 3}}));
    CHECK_THROWS_AS(xi_matrix({R(1), R(2)}, 2), ArityMismatch);
}

TEST_CASE("xi matrices are unimodular with a companion-style inverse") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-6, 6);
    for (long k = 2; k <= 5; ++k)
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rational> t;
            for (long r = 1; r < k; ++r) t.emplace_back(d(rng));
            CHECK(det_exact(xi_matrix(t, k)) == R(1));
        }
    // the k=3 inverse has the tuple back in its first column
    auto inv = inverse_exact(xi_matrix({R(2), R(3)}, 3));
    REQUIRE(inv.has_value());
    CHECK(*inv == lit({{2, 1, 0}, {-3, 0, 1}, {1, 0, 0}}));
}

TEST_CASE("extraction from the alternating tame pattern") {
    XiSequence s = extract_xi(fixtures::tame_h4());
    CHECK(s.k == 3);
    CHECK(s.n == 4);
    REQUIRE(s.tuples.size() == 8);
    CHECK(xi_product(s) == ExactMatrix::identity(3));
    for (const auto& t : s.tuples) {
        REQUIRE(t.size() == 2);
        for (const auto& c : t) CHECK(c.sign() >= 0);  // positive pattern
    }
    // the last tuple component is the first band entry k rows down
    for (long j = 1; j <= 8; ++j)
        CHECK(s.tuples[static_cast<std::size_t>(j - 1)].back() ==
              fixtures::tame_h4().band_row(j + 3)[0]);
}

TEST_CASE("extraction from the smallest SL_2 pattern") {
    XiSequence s = extract_xi(fixtures::cc_h1());
    REQUIRE(s.tuples.size() == 4);
    CHECK(s.tuples[0] == std::vector<Rational>{R(1)});
    CHECK(s.tuples[1] == std::vector<Rational>{R(2)});
    CHECK(s.tuples[2] == std::vector<Rational>{R(1)});
    CHECK(s.tuples[3] == std::vector<Rational>{R(2)});
    ExactMatrix minus_i = lit({{-1, 0}, {0, -1}});
    CHECK(xi_product(s) == minus_i);
}

TEST_CASE("extraction refuses wild and degenerate input") {
    CHECK_THROWS_AS(extract_xi(fixtures::wild_h4()), WildInput);
    FriezePattern ones = FriezePattern::periodic(2, 1, {{R(1)}});
    CHECK_THROWS_AS(extract_xi(ones), NonInvertibleWindow);
    CHECK_THROWS_AS(extract_xi(fixtures::seed_pieces()[0]), ShapeMismatch);
}

TEST_CASE("round trips through the factorization") {
    for (const FriezePattern* f :
         {&fixtures::tame_h4(), &fixtures::cc_h1(), &fixtures::nongeneric_h3(),
          &fixtures::nine_periodic_h5()}) {
        XiSequence s = extract_xi(*f);
        FriezePattern back = reconstruct(s);
        CHECK(back.equal_as_pattern(*f));

        XiSequence again = extract_xi(back);
        CHECK(again.tuples == s.tuples);

        ClassificationReport rep = classify(back);
        CHECK(rep.is_slk);
        CHECK(rep.tame);
        if (rep.period) CHECK(back.glide_period() % *rep.period == 0);
    }
}

TEST_CASE("reconstruction from a hand-written sequence") {
    XiSequence s;
    s.k = 2;
    s.n = 1;
    s.tuples = {{R(1)}, {R(2)}, {R(1)}, {R(2)}};
    FriezePattern f = reconstruct(s);
    CHECK(f.equal_as_pattern(fixtures::cc_h1()));
    CHECK(f.row_count() == 2);  // truncated to the minimal period
}

TEST_CASE("sequences violating the product identity do not close") {
    XiSequence s;
    s.k = 2;
    s.n = 1;
    s.tuples = {{R(5)}, {R(5)}, {R(5)}, {R(5)}};
    CHECK_THROWS_AS(reconstruct(s), NonClosing);

    XiSequence wrong_len;
    wrong_len.k = 2;
    wrong_len.n = 1;
    wrong_len.tuples = {{R(1)}, {R(2)}};
    CHECK_THROWS_AS(reconstruct(wrong_len), ShapeMismatch);

    XiSequence wrong_arity;
    wrong_arity.k = 3;
    wrong_arity.n = 1;
    wrong_arity.tuples = {{R(1)}, {R(1)}, {R(1)}, {R(1)}, {R(1)}};
    CHECK_THROWS_AS(reconstruct(wrong_arity), ArityMismatch);
}
