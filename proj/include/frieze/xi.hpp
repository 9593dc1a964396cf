#ifndef FRIEZE_XI_HPP
#define FRIEZE_XI_HPP

#include <vector>

#include "frieze/matrix.hpp"
#include "frieze/pattern.hpp"

namespace frieze {

/*
 * Transfer-matrix factorization.  For a pattern whose big minors all vanish,
 * consecutive k x k windows on the same rows are related by a single matrix
 * B_j = F_{i,j}^{-1} F_{i,j+1} that does not depend on i, and B_j is always
 * of the companion-like "xi" shape: subdiagonal ones, last column
 *
 *     ( (-1)^{k+1}, (-1)^k c_1, ..., -c_{k-2}, c_{k-1} )^T.
 *
 * The sequence of tuples (c_1,...,c_{k-1}) for j = 1..n+k+1 determines the
 * pattern completely, and the ordered product of the xi matrices over one
 * period equals (-1)^{k-1} I.
 */

struct XiSequence {
    long k = 0;
    long n = 0;
    // tuples[j-1] is the (k-1)-tuple of B_j; length n+k+1.
    std::vector<std::vector<Rational>> tuples;

    long period() const { return n + k + 1; }
};

// The k x k xi matrix of one tuple.  Throws ArityMismatch unless the tuple
// has exactly k-1 entries.
ExactMatrix xi_matrix(const std::vector<Rational>& tuple, long k);

// Ordered product B_1 B_2 ... B_{n+k+1}.
ExactMatrix xi_product(const XiSequence& s);

// Read the B_j off a periodic SL_k-valid pattern, checking that they agree
// at min(3, period) distinct row indices and have the xi shape; both checks
// fail with WildInput on wild input.  Singular windows give
// NonInvertibleWindow; non-periodic input gives ShapeMismatch.
XiSequence extract_xi(const FriezePattern& f);

// Rebuild the periodic pattern a sequence encodes: each row is seeded with
// its left border (0,...,0,1) and pushed forward by the order-k recurrence
//   a_{i,j+k} = (-1)^{k-1} a_{i,j} + sum_r (-1)^{k-1-r} c_r(j) a_{i,j+r}.
// Throws NonClosing when the product identity fails (the borders of the
// generated rows cannot close up in that case).
FriezePattern reconstruct(const XiSequence& s);

}  // namespace frieze

#endif  // FRIEZE_XI_HPP
