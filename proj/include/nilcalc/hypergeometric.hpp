/**
 * @file hypergeometric.hpp
 * @brief Rising factorials and generalized hypergeometric series coefficients.
 *
 * The coefficient of z^j in pFq(a1..ap; b1..bq; z) is
 *
 *     (a1)_j ... (ap)_j / [ (b1)_j ... (bq)_j * j! ]
 *
 * with (a)_j = a(a+1)...(a+j-1) the rising factorial and (a)_0 = 1. A lower
 * parameter in {0, -1, ..., -(j-1)} makes a denominator factor vanish and the
 * coefficient undefined; an upper parameter -k kills every coefficient with
 * j >= k + 1 (the classical termination mechanism).
 */
#ifndef NILCALC_HYPERGEOMETRIC_HPP
#define NILCALC_HYPERGEOMETRIC_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nilcalc/errors.hpp"
#include "nilcalc/gaussian.hpp"

namespace nilcalc {

/// Rising factorial (a)_j = a(a+1)...(a+j-1); the empty product (a)_0 is 1.
inline GaussianRational pochhammer(const GaussianRational& a, std::size_t j) {
    GaussianRational acc(1);
    for (std::size_t k = 0; k < j; ++k) {
        acc *= a + GaussianRational(static_cast<long>(k));
        if (acc.is_zero()) return acc;  // a factor hit zero; the rest cannot revive it
    }
    return acc;
}

/// Exact j! as a big integer.
inline mpz_class factorial(std::size_t j) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j));
    return f;
}

/// True when z = -k for some integer k >= 0.
inline bool is_nonpositive_integer(const GaussianRational& z) {
    return z.is_real() && z.re().is_integer() && z.re().sign() <= 0;
}

struct LowerParamViolation {
    std::size_t param_index;  // position in the lower-parameter list
    std::size_t degree;       // smallest j with (b)_j = 0
};

/// Check that (b)_j != 0 for every lower parameter b and every j = 0..m.
/// Returns the offending (parameter, degree) pair, or nullopt when all are fine.
/// Equivalently: no lower parameter lies in {0, -1, ..., -(m-1)}.
inline std::optional<LowerParamViolation> validate_lower_params(
    const std::vector<GaussianRational>& lower, std::size_t m) {
    for (std::size_t l = 0; l < lower.size(); ++l) {
        if (!is_nonpositive_integer(lower[l])) continue;
        const mpz_class k = -lower[l].re().numerator();  // lower[l] = -k, k >= 0
        if (k + 1 <= static_cast<long>(m))
            return LowerParamViolation{l, static_cast<std::size_t>(mpz_get_ui(mpz_class(k + 1).get_mpz_t()))};
    }
    return std::nullopt;
}

/// Series coefficient of z^j for pFq(upper; lower; z).
/// Throws ZeroLowerPochhammer when some (b)_j vanishes.
inline GaussianRational hypergeom_coefficient(const std::vector<GaussianRational>& upper,
                                              const std::vector<GaussianRational>& lower,
                                              std::size_t j) {
    GaussianRational den(Rational(factorial(j)));
    for (std::size_t l = 0; l < lower.size(); ++l) {
        const GaussianRational p = pochhammer(lower[l], j);
        if (p.is_zero()) throw ZeroLowerPochhammer(l, j);
        den *= p;
    }
    GaussianRational num(1);
    for (const auto& a : upper) {
        num *= pochhammer(a, j);
        if (num.is_zero()) return num;
    }
    return num / den;
}

}  // namespace nilcalc

#endif
