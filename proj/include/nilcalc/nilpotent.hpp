/**
 * @file nilpotent.hpp
 * @brief Nilpotency certificates and exact evaluation of series at nilpotent
 *        matrices.
 *
 * For N with N^{m+1} = 0, every formal series F collapses to the finite sum
 * F(N) = sum_{j=0}^{m} c_j N^j. No convergence hypothesis is involved; the
 * powers vanish, not the coefficients. Evaluation therefore only needs the
 * first m + 1 coefficients, and the results here make that collapse, its
 * spectral consequences (spectrum {c_0}, trace n c_0, determinant c_0^n) and
 * the finite Neumann inverse available as exact operations.
 */
#ifndef NILCALC_NILPOTENT_HPP
#define NILCALC_NILPOTENT_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nilcalc/errors.hpp"
#include "nilcalc/matrix.hpp"
#include "nilcalc/series.hpp"

namespace nilcalc {

/// Proof that N^index = 0: carries the last nonzero power as a witness.
struct NilpotencyCertificate {
    std::size_t index;         // smallest s with N^s = 0; the zero matrix has index 1
    ExactMatrix witness_power;  // N^{index-1} (identity when index = 1)
};

/// Compute the nilpotency index by explicit powering N, N^2, ..., N^n.
/// A nilpotent n x n matrix satisfies N^n = 0, so if the n-th power is
/// nonzero the matrix is not nilpotent at all.
inline NilpotencyCertificate nilpotency_index(const ExactMatrix& N) {
    ExactMatrix prev = ExactMatrix::identity(N.dim());
    ExactMatrix cur = N;
    for (std::size_t s = 1; s <= N.dim(); ++s) {
        if (cur.is_zero()) return {s, prev};
        prev = cur;
        cur = cur * N;
    }
    throw NotNilpotent(N.dim());
}

/// F(N) = sum_{j=0}^{cap} c_j N^j by Horner: start from c_cap I and fold
/// result <- c_j I + N * result downward. Requires cap >= index - 1 so every
/// surviving term is present.
inline ExactMatrix evaluate_series(const TruncSeries& F, const ExactMatrix& N) {
    const NilpotencyCertificate cert = nilpotency_index(N);
    if (F.cap() + 1 < cert.index) throw CapTooSmall(F.cap(), cert.index);
    const ExactMatrix id = ExactMatrix::identity(N.dim());
    ExactMatrix result = F[F.cap()] * id;
    for (std::size_t j = F.cap(); j-- > 0;) result = F[j] * id + N * result;
    return result;
}

/// pFq(upper; lower; N) for nilpotent N of index m + 1: the series collapses
/// to the sum of the first m + 1 terms. Lower parameters must keep all those
/// coefficients defined.
inline ExactMatrix evaluate_hypergeom(const std::vector<GaussianRational>& upper,
                                      const std::vector<GaussianRational>& lower,
                                      const ExactMatrix& N) {
    const NilpotencyCertificate cert = nilpotency_index(N);
    return evaluate_series(TruncSeries::hypergeometric(upper, lower, cert.index - 1), N);
}

/// Inverse of F(N) via the finite Neumann series: with F(N) = c0 I + R and
/// R nilpotent,
///   F(N)^{-1} = c0^{-1} sum_{k=0}^{m} (-1)^k c0^{-k} R^k.
/// Throws NotInvertible when c0 = 0 (then F(N) is nilpotent and has no
/// inverse).
inline ExactMatrix invert_via_neumann(const TruncSeries& F, const ExactMatrix& N) {
    const GaussianRational c0 = F.constant_term();
    if (c0.is_zero()) throw NotInvertible();
    const NilpotencyCertificate cert = nilpotency_index(N);
    const std::size_t m = cert.index - 1;
    const GaussianRational c0_inv = c0.inverse();
    const ExactMatrix id = ExactMatrix::identity(N.dim());
    const ExactMatrix scaled_rest = c0_inv * (evaluate_series(F, N) - c0 * id);
    ExactMatrix acc = id;  // Horner over sum (-S)^k, S = c0^{-1} R
    for (std::size_t k = 0; k < m; ++k) acc = id - scaled_rest * acc;
    return c0_inv * acc;
}

struct SpectralSummary {
    GaussianRational spectrum_point;  // the single eigenvalue c_0
    GaussianRational trace;           // n * c_0
    GaussianRational determinant;     // c_0^n
    std::size_t multiplicity;         // n
};

/// Spectral data of F(N): the spectrum is the single point c_0 with full
/// multiplicity. Each value is cross-checked against an independent route
/// (nilpotency of F(N) - c0 I, the literal entry sum, Bareiss elimination);
/// a mismatch would be a library defect, reported as logic_error.
inline SpectralSummary spectral_summary(const TruncSeries& F, const ExactMatrix& N) {
    const std::size_t n = N.dim();
    const ExactMatrix value = evaluate_series(F, N);  // certifies N nilpotent
    const GaussianRational c0 = F.constant_term();

    nilpotency_index(value - c0 * ExactMatrix::identity(n));  // throws if spectrum != {c0}

    const GaussianRational trace = value.trace();
    if (trace != GaussianRational(Rational(static_cast<long>(n))) * c0)
        throw std::logic_error("trace of F(N) deviates from n * c0");

    const GaussianRational det = value.determinant();
    if (det != c0.pow(n)) throw std::logic_error("determinant of F(N) deviates from c0^n");

    return {c0, trace, det, n};
}

}  // namespace nilcalc

#endif
