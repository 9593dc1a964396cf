#ifndef FRIEZE_RATIONAL_HPP
#define FRIEZE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "frieze/errors.hpp"

namespace frieze {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact rational number.
 *
 * Thin value wrapper around boost cpp_rational that pins down the invariants
 * the rest of the library relies on: always reduced, denominator > 0, and a
 * stable text form ("p/q", or just "p" when the denominator is 1) that
 * round-trips through parse().
 */
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw ZeroInverse("rational with zero denominator");
        // division (rather than the two-argument ctor) normalizes sign and gcd
        v_ = boost::multiprecision::cpp_rational(num);
        v_ /= boost::multiprecision::cpp_rational(den);
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_integer() const { return den() == 1; }
    bool is_zero() const { return v_ == 0; }

    // The integer value, if this rational is one.
    std::optional<BigInt> as_integer() const {
        if (!is_integer()) return std::nullopt;
        return num();
    }

    int sign() const { return v_ == 0 ? 0 : (v_ < 0 ? -1 : 1); }
    Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

    Rational reciprocal() const {
        if (v_ == 0) throw ZeroInverse("reciprocal of 0");
        return Rational(1 / v_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw ZeroInverse("division by 0");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    std::string to_string() const {
        std::string s = num().str();
        if (!is_integer()) s += "/" + den().str();
        return s;
    }

    // Accepts "p" or "p/q" in plain decimal with optional leading '-'.
    // Anything else (hex, whitespace, empty parts, zero denominator) throws.
    static Rational parse(const std::string& text) {
        auto is_decimal = [](const std::string& s) {
            std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
            if (start == s.size()) return false;
            for (std::size_t i = start; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        auto slash = text.find('/');
        if (slash == std::string::npos) {
            if (!is_decimal(text)) throw ParseError("bad rational literal '" + text + "'");
            return Rational(BigInt(text));
        }
        std::string ns = text.substr(0, slash);
        std::string ds = text.substr(slash + 1);
        if (!is_decimal(ns) || !is_decimal(ds) || BigInt(ds) == 0)
            throw ParseError("bad rational literal '" + text + "'");
        return Rational(BigInt(ns), BigInt(ds));
    }

  private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

}  // namespace frieze

#endif  // FRIEZE_RATIONAL_HPP
