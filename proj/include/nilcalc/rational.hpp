/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational numbers.
 *
 * Thin value wrapper around GMP's mpq_class. Values are always stored
 * canonically: denominator > 0 and gcd(|num|, den) = 1, so equality is
 * structural. The textual form is "p/q", or just "p" when q = 1.
 */
#ifndef NILCALC_RATIONAL_HPP
#define NILCALC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace nilcalc {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const mpz_class& n) : v_(n) {}

    Rational(long num, long den) : v_(num, den) { canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { canonicalize(); }

    /// Parse "p/q" or "p" (base 10, optional leading '-').
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(mpz_class(text));
            return Rational(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a rational: \"" + text + "\"");
        }
    }

    /// Render as "p/q", or "p" when the denominator is 1.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("rational division by zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational pow(std::size_t k) const {
        Rational acc(1);
        Rational base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) acc *= base;
            if (k > 1) base *= base;
        }
        return acc;
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    void canonicalize() {
        if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;  // canonical: den > 0, gcd(|num|, den) = 1
};

}  // namespace nilcalc

#endif
