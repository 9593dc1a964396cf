#include "frieze/fixtures.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace frieze::fixtures {

namespace {

// Split a whitespace-formatted block into rows of integers.  Keeps the
// transcriptions below readable as the rectangular excerpts they are.
std::vector<std::vector<long long>> grid(const char* text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::vector<long long> row;
    long long v;
    while (cells >> v) row.push_back(v);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

const char* kNinePeriodic = R"(
  1   0   0   1  13  88 314  25   4   1   0   0
  2   1   0   0   1   7  25   2   1   2   1   0
138  72   1   0   0   1   4   1  49 138  72   1
389 203   3   1   0   0   1   2 138 389 203   3
203 106   2   3   1   0   0   1  72 203 106   2
  3   2   3  17   7   1   0   0   1   3   2   3
  1   3  17  97  40   6   1   0   0   1   3  17
  0   1   7  40  17   6  13   1   0   0   1   7
  0   0   1   6   6  25  88   7   1   0   0   1
)";

const char* kTameH4 = R"(
1 0 0 1 3 8 4 7 1 0 0
1 1 0 0 1 3 2 4 1 1 0
4 7 1 0 0 1 3 8 4 7 1
2 4 1 1 0 0 1 3 2 4 1
3 8 4 7 1 0 0 1 3 8 4
1 3 2 4 1 1 0 0 1 3 2
0 1 3 8 4 7 1 0 0 1 3
0 0 1 3 2 4 1 1 0 0 1
)";

const char* kNongenericH3 = R"(
1 0 0 1 0 0 1 1 0 0
1 1 0 0 1 1 1 1 1 0
1 1 1 0 0 1 2 1 1 1
1 0 0 1 0 0 1 1 0 0
1 0 -1 1 1 0 0 1 0 -1
0 1 0 -1 1 1 0 0 1 0
0 0 1 0 -1 0 1 0 0 1
)";

const char* kWildH4 = R"(
1 1 1 2 1 1 0 0
0 1 1 1 2 4 1 0
0 0 1 1 1 2 1 1
1 0 0 1 1 1 2 4
1 1 0 0 1 1 1 2
2 4 1 0 0 1 1 1
)";

// The twelve seed pieces, one 2x8 excerpt each (columns 0..7, rows 1..2).
const char* kSeedPieces[12] = {
    "1 1 1 1 1 1 1 0\n0 1 2 2 1 1 2 1",
    "1 1 1 1 1 1 1 0\n0 1 2 2 1 2 4 1",
    "1 1 1 1 1 2 1 0\n0 1 2 2 1 2 2 1",
    "1 1 2 1 1 2 1 0\n0 1 4 2 1 2 2 1",
    "1 2 1 1 1 1 1 0\n0 1 1 2 1 1 2 1",
    "1 2 1 1 2 1 1 0\n0 1 1 1 1 1 2 1",
    "1 2 1 1 2 2 1 0\n0 1 1 1 1 1 1 1",
    "1 2 2 1 1 2 1 0\n0 1 2 2 1 2 2 1",
    "1 2 2 1 2 2 1 0\n0 1 2 1 1 1 1 1",
    "1 2 2 1 2 2 1 0\n0 1 2 1 1 2 2 1",
    "1 2 2 1 2 4 1 0\n0 1 2 1 1 2 1 1",
    "1 4 2 1 2 2 1 0\n0 1 1 1 1 1 1 1",
};

const char* kSegment0 = R"(
 1  4  9 60 160 29 45 18 20  1  0  0  1  4  9 60 160 29 45 18 20
 0  1  4 27 72 13 20  8  9  1  1  0  0  1  4 27 72 13 20  8  9
 0  0  1  7 19  4  8  3  4  4  7  1  0  0  1  7 19  4  8  3  4
 1  0  0  1  5  5 21  7 12 25 45  7  1  0  0  1  5  5 21  7 12
 1  1  0  0  1  2  9  3  5 10 18  3  1  1  0  0  1  2  9  3  5
 5  8  1  0  0  1  5  2  4  9 16  4  5  8  1  0  0  1  5  2  4
21 35  5  1  0  0  1  2  7 20 35 12 21 35  5  1  0  0  1  2  7
12 20  3  1  1  0  0  1  4 12 21  7 12 20  3  1  1  0  0  1  4
 8 13  4  7 16  1  0  0  1  5  9  4  8 13  4  7 16  1  0  0  1
 5  8  3  6 14  1  1  0  0  1  2  2  5  8  3  6 14  1  1  0  0
20 32 11 21 49  4  8  1  0  0  1  7 20 32 11 21 49  4  8  1  0
 3  5  4 10 23  4 23  5  1  0  0  1  3  5  4 10 23  4 23  5  1
)";

const char* kSegment1 = R"(
   1    4   29   84  192   41  261   58   12    1    0    0    1    4   29   84  192   41  261   58   12
   0    1   12   35   80   17  108   24    5    1    1    0    0    1   12   35   80   17  108   24    5
   0    0    1    3    7    4   32    7    4   44   75    1    0    0    1    3    7    4   32    7    4
   1    0    0    1    5   49  437   95   68  833 1421   19    1    0    0    1    5   49  437   95   68
   1    1    0    0    1   18  161   35   25  306  522    7    1    1    0    0    1   18  161   35   25
  81  128    1    0    0    1    9    2    4   61  104    4   81  128    1    0    0    1    9    2    4
3317 5243   41    1    0    0    1    2  107 1804 3075  148 3317 5243   41    1    0    0    1    2  107
1860 2940   23    1    1    0    0    1   60 1012 1725   83 1860 2940   23    1    1    0    0    1   60
 112  177    4  123  280    1    0    0    1   17   29    4  112  177    4  123  280    1    0    0    1
1053 1664   47 1598 3638   13    1    0    0    1    2   34 1053 1664   47 1598 3638   13    1    0    0
3564 5632  159 5405 12305   44    8    1    0    0    1  115 3564 5632  159 5405 12305   44    8    1    0
  31   49    4  170  387    4  411   89    1    0    0    1   31   49    4  170  387    4  411   89    1
)";

}  // namespace

const FriezePattern& nine_periodic_h5() {
  static const FriezePattern p =
      from_printed_grid(3, 5, grid(kNinePeriodic), -3, /*periodic=*/true);
  return p;
}

const FriezePattern& tame_h4() {
  static const FriezePattern p =
      from_printed_grid(3, 4, grid(kTameH4), -3, /*periodic=*/true);
  return p;
}

const FriezePattern& nongeneric_h3() {
  static const FriezePattern p =
      from_printed_grid(3, 3, grid(kNongenericH3), -3, /*periodic=*/true);
  return p;
}

const FriezePattern& wild_h4() {
  static const FriezePattern p =
      from_printed_grid(3, 4, grid(kWildH4), 0, /*periodic=*/true);
  return p;
}

const FriezePattern& cc_h1() {
  static const FriezePattern p = FriezePattern::periodic(
      2, 1, {{Rational(1)}, {Rational(2)}, {Rational(1)}, {Rational(2)}});
  return p;
}

const std::vector<FriezePattern>& seed_pieces() {
  static const std::vector<FriezePattern> pieces = [] {
    std::vector<FriezePattern> out;
    out.reserve(12);
    for (const char* text : kSeedPieces)
      out.push_back(from_printed_grid(3, 5, grid(text), 0, /*periodic=*/false,
                                      /*first_row=*/1));
    return out;
  }();
  return pieces;
}

const std::vector<std::vector<long long>>& segment_grid(int ell) {
  static const std::vector<std::vector<long long>> g0 = grid(kSegment0);
  static const std::vector<std::vector<long long>> g1 = grid(kSegment1);
  if (ell == 0) return g0;
  if (ell == 1) return g1;
  throw std::out_of_range("segment_grid: only excerpts 0 and 1 are stored");
}

FriezePattern segment_excerpt(int ell) {
  return from_printed_grid(3, 8, segment_grid(ell), 0, /*periodic=*/false,
                           /*first_row=*/1);
}

}  // namespace frieze::fixtures
