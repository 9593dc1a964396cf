#ifndef FRIEZE_MATRIX_HPP
#define FRIEZE_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frieze/rational.hpp"

namespace frieze {

/** Dense matrix of exact rationals.  Row-major, 0-indexed storage. */
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

    bool is_integral() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    std::string to_string() const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> cells_;
};

// Exact determinant via fraction-free (Bareiss) elimination on an integer
// lift of the matrix.  Throws NonSquare for rectangular input; the empty
// 0x0 matrix has determinant 1 by convention.
Rational det_exact(const ExactMatrix& m);

// Exact inverse by Gauss-Jordan elimination, or nullopt when singular.
std::optional<ExactMatrix> inverse_exact(const ExactMatrix& m);

}  // namespace frieze

#endif  // FRIEZE_MATRIX_HPP
