/**
 * @file series.hpp
 * @brief Truncated formal power series: the quotient ring C[x]/(x^{cap+1}).
 *
 * A TruncSeries stores the coefficients c_0..c_cap of a formal series known
 * modulo x^{cap+1}. This is the universal home of a nilpotent of index
 * cap + 1, so evaluating any analytic function at such a nilpotent only ever
 * needs these coefficients. Convergence never enters: coefficients like j!
 * are perfectly fine.
 *
 * Caps never adjust silently. Combining series with different caps throws
 * CapMismatch; use truncated() to change the cap on purpose.
 */
#ifndef NILCALC_SERIES_HPP
#define NILCALC_SERIES_HPP

#include <cstddef>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilcalc/errors.hpp"
#include "nilcalc/gaussian.hpp"
#include "nilcalc/hypergeometric.hpp"

namespace nilcalc {

/// Sentinel for "no nonzero coefficient in degree >= 1": the series is
/// constant modulo its cap.
inline constexpr std::size_t kInfiniteOrder = std::numeric_limits<std::size_t>::max();

class TruncSeries {
public:
    /// Zero series with the given cap.
    explicit TruncSeries(std::size_t cap) : cap_(cap), c_(cap + 1) {}

    TruncSeries(std::size_t cap, std::vector<GaussianRational> coeffs)
        : cap_(cap), c_(std::move(coeffs)) {
        if (c_.size() != cap_ + 1)
            throw std::invalid_argument("coefficient count must be cap + 1");
    }

    static TruncSeries constant(const GaussianRational& c0, std::size_t cap) {
        TruncSeries s(cap);
        s.c_[0] = c0;
        return s;
    }

    /// coeff * x^degree (degree must not exceed cap).
    static TruncSeries monomial(std::size_t degree, std::size_t cap,
                                const GaussianRational& coeff = GaussianRational(1)) {
        if (degree > cap) throw std::invalid_argument("monomial degree exceeds cap");
        TruncSeries s(cap);
        s.c_[degree] = coeff;
        return s;
    }

    /// Taylor coefficients of pFq(upper; lower; x) up to the cap.
    static TruncSeries hypergeometric(const std::vector<GaussianRational>& upper,
                                      const std::vector<GaussianRational>& lower,
                                      std::size_t cap) {
        if (auto v = validate_lower_params(lower, cap))
            throw ZeroLowerPochhammer(v->param_index, v->degree);
        TruncSeries s(cap);
        for (std::size_t j = 0; j <= cap; ++j) s.c_[j] = hypergeom_coefficient(upper, lower, j);
        return s;
    }

    /// Coefficients t^j / j!, the nilpotent factor of exp(t(z - center)).
    static TruncSeries exp_scaled(const GaussianRational& t, std::size_t cap) {
        TruncSeries s(cap);
        GaussianRational tj(1);  // t^j
        for (std::size_t j = 0; j <= cap; ++j) {
            s.c_[j] = tj / GaussianRational(Rational(factorial(j)));
            tj *= t;
        }
        return s;
    }

    /// Recenter a polynomial: given F(z) = sum poly[d] z^d, return the
    /// coefficients of G(w) = F(lambda + w) up to the cap. The degree-j
    /// coefficient equals F^(j)(lambda)/j!, computed by exact binomial
    /// expansion of (lambda + w)^d.
    static TruncSeries recentered_polynomial(const std::vector<GaussianRational>& poly,
                                             const GaussianRational& lambda, std::size_t cap) {
        TruncSeries s(cap);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            if (poly[d].is_zero()) continue;
            // (lambda + w)^d = sum_j C(d, j) lambda^{d-j} w^j
            GaussianRational lam_pow = lambda.pow(d);  // lambda^{d-j}, descending
            const bool lambda_zero = lambda.is_zero();
            for (std::size_t j = 0; j <= d && j <= cap; ++j) {
                if (lambda_zero) {
                    if (j == d) s.c_[j] += poly[d];
                    continue;
                }
                mpz_class binom;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d),
                             static_cast<unsigned long>(j));
                s.c_[j] += poly[d] * GaussianRational(Rational(binom)) * lam_pow;
                lam_pow /= lambda;
            }
        }
        return s;
    }

    std::size_t cap() const { return cap_; }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    const GaussianRational& operator[](std::size_t j) const { return c_.at(j); }
    const GaussianRational& constant_term() const { return c_[0]; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Order of the non-constant part: min{ j >= 1 : c_j != 0 }, or
    /// kInfiniteOrder when the series is constant modulo the cap.
    std::size_t order() const { return order_up_to(cap_); }

    /// Same, but only inspecting degrees 1..min(m, cap).
    std::size_t order_up_to(std::size_t m) const {
        for (std::size_t j = 1; j <= m && j <= cap_; ++j)
            if (!c_[j].is_zero()) return j;
        return kInfiniteOrder;
    }

    /// Copy with a different cap; extending pads with zeros. Always explicit.
    TruncSeries truncated(std::size_t new_cap) const {
        TruncSeries s(new_cap);
        for (std::size_t j = 0; j <= new_cap && j <= cap_; ++j) s.c_[j] = c_[j];
        return s;
    }

    TruncSeries operator-() const {
        TruncSeries s(cap_);
        for (std::size_t j = 0; j <= cap_; ++j) s.c_[j] = -c_[j];
        return s;
    }

    TruncSeries operator+(const TruncSeries& o) const {
        require_same_cap(o);
        TruncSeries s(cap_);
        for (std::size_t j = 0; j <= cap_; ++j) s.c_[j] = c_[j] + o.c_[j];
        return s;
    }

    TruncSeries operator-(const TruncSeries& o) const {
        require_same_cap(o);
        TruncSeries s(cap_);
        for (std::size_t j = 0; j <= cap_; ++j) s.c_[j] = c_[j] - o.c_[j];
        return s;
    }

    /// Cauchy product with every term above the cap discarded.
    TruncSeries operator*(const TruncSeries& o) const {
        require_same_cap(o);
        TruncSeries s(cap_);
        for (std::size_t j = 0; j <= cap_; ++j) {
            if (c_[j].is_zero()) continue;
            for (std::size_t k = 0; j + k <= cap_; ++k) {
                if (o.c_[k].is_zero()) continue;
                s.c_[j + k] += c_[j] * o.c_[k];
            }
        }
        return s;
    }

    friend TruncSeries operator*(const GaussianRational& a, const TruncSeries& f) {
        TruncSeries s(f.cap_);
        for (std::size_t j = 0; j <= f.cap_; ++j) s.c_[j] = a * f.c_[j];
        return s;
    }

    bool operator==(const TruncSeries& o) const { return cap_ == o.cap_ && c_ == o.c_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    /// Multiplicative inverse modulo x^{cap+1}. With F = c0 + R, R nilpotent
    /// in the quotient, the finite Neumann series gives
    ///   F^{-1} = c0^{-1} * sum_{k=0}^{cap} (-1)^k (c0^{-1} R)^k.
    /// Throws NotInvertible when c0 = 0 (F itself is nilpotent).
    TruncSeries inverse() const {
        if (c_[0].is_zero()) throw NotInvertible();
        const GaussianRational c0_inv = c_[0].inverse();
        TruncSeries scaled_rest = c0_inv * *this;  // 1 + c0^{-1} R
        scaled_rest.c_[0] = GaussianRational(0);   // S = c0^{-1} R
        const TruncSeries one = constant(GaussianRational(1), cap_);
        TruncSeries acc = one;  // Horner over sum (-S)^k
        for (std::size_t k = 0; k < cap_; ++k) acc = one - scaled_rest * acc;
        return c0_inv * acc;
    }

    /// F(G(x)) truncated at the shared cap, by Horner on F's coefficients.
    /// The inner series must have zero constant term.
    TruncSeries compose(const TruncSeries& inner) const {
        require_same_cap(inner);
        if (!inner.c_[0].is_zero()) throw NonzeroConstantInner();
        TruncSeries acc = constant(c_[cap_], cap_);
        for (std::size_t j = cap_; j-- > 0;) acc = acc * inner + constant(c_[j], cap_);
        return acc;
    }

    /// Human-readable "1 + 3/5 x - 1/5 x^2" form (zero terms skipped).
    std::string str(const std::string& var = "x") const {
        std::string out;
        for (std::size_t j = 0; j <= cap_; ++j) {
            if (c_[j].is_zero()) continue;
            std::string coeff = c_[j].str();
            if (!out.empty()) {
                if (c_[j].is_real() && coeff.front() == '-') {
                    out += " - ";
                    coeff.erase(0, 1);
                } else {
                    out += " + ";
                }
            }
            if (coeff.find('+') != std::string::npos || (j > 0 && coeff.find('i') != std::string::npos))
                coeff = "(" + coeff + ")";
            if (j == 0) {
                out += coeff;
            } else {
                out += (coeff == "1" ? "" : coeff + " ") + var;
                if (j > 1) out += "^" + std::to_string(j);
            }
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncSeries& f) { return os << f.str(); }

private:
    void require_same_cap(const TruncSeries& o) const {
        if (cap_ != o.cap_) throw CapMismatch(cap_, o.cap_);
    }

    std::size_t cap_;
    std::vector<GaussianRational> c_;  // c_.size() == cap_ + 1
};

}  // namespace nilcalc

#endif
