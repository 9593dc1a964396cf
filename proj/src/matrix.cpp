#include "frieze/matrix.hpp"

#include <sstream>
#include <utility>

#include "frieze/errors.hpp"

namespace frieze {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool ExactMatrix::is_integral() const {
    for (const Rational& x : cells_)
        if (!x.is_integer()) return false;
    return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_)
        throw ShapeMismatch("matrix product " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                            " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    ExactMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            Rational acc;
            for (std::size_t t = 0; t < a.cols_; ++t) acc += a.at(i, t) * b.at(t, j);
            out.at(i, j) = std::move(acc);
        }
    return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
    }
    os << "]";
    return os.str();
}

namespace {

BigInt lcm_big(const BigInt& a, const BigInt& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace

/*
 * Fraction-free elimination.  Rational entries are first lifted row by row to
 * integers (each row scaled by the lcm of its denominators, the scale factors
 * divided back out of the final determinant).  Bareiss's one-step rule
 *
 *     a[i][j] <- (a[i][j]*a[p][p] - a[i][p]*a[p][j]) / prev
 *
 * keeps every intermediate value an exact integer (prev is the previous
 * pivot, 1 initially), so there is no rational normalization in the hot loop
 * and intermediate growth stays polynomial instead of exponential.
 */
Rational det_exact(const ExactMatrix& m) {
    if (m.rows() != m.cols())
        throw NonSquare("det of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    const std::size_t n = m.rows();
    if (n == 0) return 1;  // empty product convention

    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    Rational scale = 1;  // determinant of the lift relative to the input
    for (std::size_t i = 0; i < n; ++i) {
        BigInt d = 1;
        for (std::size_t j = 0; j < n; ++j) d = lcm_big(d, m.at(i, j).den());
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = m.at(i, j);
            a[i][j] = x.num() * (d / x.den());
        }
        scale = scale * Rational(d);
    }

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (a[p][p] == 0) {
            std::size_t swap_row = p + 1;
            while (swap_row < n && a[swap_row][p] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[p], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            }
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    BigInt det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(det) / scale;
}

std::optional<ExactMatrix> inverse_exact(const ExactMatrix& m) {
    if (m.rows() != m.cols())
        throw NonSquare("inverse of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    const std::size_t n = m.rows();
    ExactMatrix work = m;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t pivot = p;
        while (pivot < n && work.at(pivot, p).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != p) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(p, j), work.at(pivot, j));
                std::swap(inv.at(p, j), inv.at(pivot, j));
            }
        }
        Rational inv_pivot = work.at(p, p).reciprocal();
        for (std::size_t j = 0; j < n; ++j) {
            work.at(p, j) = work.at(p, j) * inv_pivot;
            inv.at(p, j) = inv.at(p, j) * inv_pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p || work.at(i, p).is_zero()) continue;
            Rational f = work.at(i, p);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) -= f * work.at(p, j);
                inv.at(i, j) -= f * inv.at(p, j);
            }
        }
    }
    return inv;
}

}  // namespace frieze
