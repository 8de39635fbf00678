/**
 * @file gaussian.hpp
 * @brief Gaussian rationals: the field Q(i) with exact arithmetic.
 *
 * Every scalar in the library lives here. Field operations are exact, so
 * equality (and in particular "is this matrix entry zero?") is decidable.
 */
#ifndef NILCALC_GAUSSIAN_HPP
#define NILCALC_GAUSSIAN_HPP

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>

#include "nilcalc/rational.hpp"

namespace nilcalc {

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int n) : re_(n) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// The imaginary unit.
    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    GaussianRational conjugate() const { return {re_, -im_}; }

    /// |z|^2 = re^2 + im^2, an ordinary rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(i)");
        const Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    GaussianRational pow(std::size_t k) const {
        GaussianRational acc(1);
        GaussianRational base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) acc *= base;
            if (k > 1) base *= base;
        }
        return acc;
    }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    /// Compact human-readable form: "0", "3/5", "i", "-2i", "1+i", "1-2/3i".
    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string im_part;
        if (im_.is_one())
            im_part = "i";
        else if (im_ == Rational(-1))
            im_part = "-i";
        else
            im_part = im_.str() + "i";
        if (re_.is_zero()) return im_part;
        if (im_.sign() > 0) return re_.str() + "+" + im_part;
        return re_.str() + im_part;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << z.str();
    }

private:
    Rational re_;
    Rational im_;
};

}  // namespace nilcalc

#endif
