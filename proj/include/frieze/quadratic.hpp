#ifndef FRIEZE_QUADRATIC_HPP
#define FRIEZE_QUADRATIC_HPP

#include <optional>
#include <string>

#include "frieze/rational.hpp"

namespace frieze {

/**
 * Element of the real quadratic field Q(sqrt(80)), stored as a + b*sqrt(80)
 * with exact rational components.  The radicand is kept as 80 on purpose
 * (no rewriting to 4*sqrt(5)): every closed-form table in the unbounded
 * construction is written against sqrt(80), and keeping the basis verbatim
 * means those coefficients transcribe one-to-one.
 *
 * The distinguished unit is w = 9 + sqrt(80); its conjugate is its inverse
 * (norm(w) = 81 - 80 = 1), which is what makes w^l + w^-l integral.
 */
class QuadNumber {
  public:
    static constexpr long long kRadicand = 80;

    QuadNumber() : a_(0), b_(0) {}
    QuadNumber(Rational rational_part) : a_(std::move(rational_part)), b_(0) {}  // NOLINT
    QuadNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadNumber unit_w() { return QuadNumber(9, 1); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    std::optional<BigInt> as_integer() const {
        if (!is_rational()) return std::nullopt;
        return a_.as_integer();
    }

    QuadNumber conj() const { return QuadNumber(a_, -b_); }

    // Field norm a^2 - 80 b^2; zero only for the zero element since sqrt(80)
    // is irrational.
    Rational norm() const { return a_ * a_ - Rational(kRadicand) * b_ * b_; }

    QuadNumber inverse() const {
        if (is_zero()) throw ZeroInverse("QuadNumber::inverse of 0");
        Rational n = norm();
        return QuadNumber(a_ / n, -b_ / n);
    }

    friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
        return QuadNumber(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) {
        return QuadNumber(x.a_ - y.a_, x.b_ - y.b_);
    }
    QuadNumber operator-() const { return QuadNumber(-a_, -b_); }
    friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
        return QuadNumber(x.a_ * y.a_ + Rational(kRadicand) * x.b_ * y.b_,
                          x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadNumber operator/(const QuadNumber& x, const QuadNumber& y) { return x * y.inverse(); }

    friend bool operator==(const QuadNumber& x, const QuadNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadNumber& x, const QuadNumber& y) { return !(x == y); }

    // Integer power by binary exponentiation; negative exponents go through
    // the exact inverse.
    QuadNumber pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        QuadNumber base = *this;
        QuadNumber acc(1);
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string s = a_.is_zero() ? "" : a_.to_string();
        if (b_.sign() >= 0 && !s.empty()) s += "+";
        s += b_.to_string() + "*sqrt(80)";
        return s;
    }

  private:
    Rational a_;
    Rational b_;
};

}  // namespace frieze

#endif  // FRIEZE_QUADRATIC_HPP
