/**
 * @file exceptional.hpp
 * @brief Exceptional points: H = lambda I + N with nilpotent N.
 *
 * An exceptional point of order m + 1 is a matrix whose n eigenvectors
 * coalesce: H = lambda I + N with N^{m+1} = 0, N^m != 0. Everything
 * observable about such an H is carried by the pair (lambda, N): the
 * resolvent is a finite Laurent sum with a pole of order m + 1, the time
 * evolution is exp(lambda t) times an exact matrix polynomial in t, and a
 * function with contact order r at lambda compresses the Jordan depth from
 * m + 1 to at most ceil((m+1)/r).
 *
 * Functions are supplied to this module already recentered: G(w) holds the
 * Taylor coefficients of F(lambda + w), so F(H) = G(N).
 */
#ifndef NILCALC_EXCEPTIONAL_HPP
#define NILCALC_EXCEPTIONAL_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nilcalc/depth.hpp"
#include "nilcalc/errors.hpp"
#include "nilcalc/matrix.hpp"
#include "nilcalc/nilpotent.hpp"
#include "nilcalc/series.hpp"

namespace nilcalc {

struct ExceptionalPoint {
    GaussianRational lambda;     // the single coalesced eigenvalue
    ExactMatrix nilpotent_part;  // N = H - lambda I
    std::size_t order;           // m + 1, the nilpotency index of N
    std::size_t dimension;       // n
};

/// Split H = lambda I + N. The only candidate for lambda is trace(H)/n; the
/// split is certified by checking that the remainder is nilpotent, otherwise
/// H has more than one distinct eigenvalue and is rejected.
inline ExceptionalPoint ep_decompose(const ExactMatrix& H) {
    const std::size_t n = H.dim();
    const GaussianRational lambda = H.trace() / GaussianRational(Rational(static_cast<long>(n)));
    const ExactMatrix N = H - lambda * ExactMatrix::identity(n);
    try {
        const NilpotencyCertificate cert = nilpotency_index(N);
        return {lambda, N, cert.index, n};
    } catch (const NotNilpotent&) {
        throw NotExceptionalPoint(
            "matrix is not of the form lambda I + nilpotent: with lambda = trace/n = " +
            lambda.str() + ", power " + std::to_string(n) +
            " of the remainder is nonzero:\n" + N.pow(n).str());
    }
}

/// Gain-loss two-level Hamiltonian [[omega - i gamma, kappa], [kappa, omega + i gamma]].
/// At kappa = gamma the eigenvalues coalesce at omega and the matrix becomes
/// an exceptional point of order 2.
inline ExactMatrix pt_symmetric_2x2(const Rational& omega, const Rational& gamma,
                                    const Rational& kappa) {
    ExactMatrix h(2);
    h.at(0, 0) = GaussianRational(omega, -gamma);
    h.at(0, 1) = GaussianRational(kappa);
    h.at(1, 0) = GaussianRational(kappa);
    h.at(1, 1) = GaussianRational(omega, gamma);
    return h;
}

/// U(t) = exp(lambda t) * sum_{j=0}^{m} t^j M_j with M_j = N^j / j!.
/// The matrix coefficients are exact; the scalar prefactor stays symbolic.
struct EvolutionPolynomial {
    GaussianRational lambda;
    std::vector<ExactMatrix> matrix_coeffs;  // M_0 = I, ..., M_m = N^m / m!
};

inline EvolutionPolynomial time_evolution(const ExceptionalPoint& ep) {
    EvolutionPolynomial evo{ep.lambda, {}};
    evo.matrix_coeffs.reserve(ep.order);
    ExactMatrix power = ExactMatrix::identity(ep.dimension);
    for (std::size_t j = 0; j < ep.order; ++j) {
        evo.matrix_coeffs.push_back(GaussianRational(Rational(factorial(j))).inverse() * power);
        if (j + 1 < ep.order) power = power * ep.nilpotent_part;
    }
    return evo;
}

/// U(t) at a concrete rational t, split into the exact polynomial part
/// sum t^j N^j / j! and the exponent lambda*t of the scalar prefactor
/// exp(lambda t), which is never evaluated numerically here.
struct EvolutionSample {
    GaussianRational prefactor_exponent;  // lambda * t
    ExactMatrix polynomial_part;
};

inline EvolutionSample evolution_at(const ExceptionalPoint& ep, const GaussianRational& t) {
    return {ep.lambda * t, evaluate_series(TruncSeries::exp_scaled(t, ep.order - 1), ep.nilpotent_part)};
}

/// Finite Laurent expansion around lambda: coeffs[j] is the coefficient of
/// (z - lambda)^{-(j+1)}.
struct LaurentExpansion {
    GaussianRational lambda;
    std::vector<ExactMatrix> coeffs;
    std::size_t pole_order;  // 1 + largest j with nonzero coefficient; 0 if all vanish
};

/// Scalar-valued variant (traces of the matrix coefficients).
struct ScalarLaurent {
    GaussianRational lambda;
    std::vector<GaussianRational> coeffs;
    std::size_t pole_order;
};

/// (zI - H)^{-1} = sum_{j=0}^{m} N^j / (z - lambda)^{j+1}, exact and finite.
inline LaurentExpansion resolvent_expansion(const ExceptionalPoint& ep) {
    LaurentExpansion lau{ep.lambda, {}, ep.order};
    lau.coeffs.reserve(ep.order);
    ExactMatrix power = ExactMatrix::identity(ep.dimension);
    for (std::size_t j = 0; j < ep.order; ++j) {
        lau.coeffs.push_back(power);
        if (j + 1 < ep.order) power = power * ep.nilpotent_part;
    }
    return lau;
}

/// Modified resolvent for a transformed Hamiltonian: the scalar response
///   tr(F(H) (zI - H)^{-1}) = sum_j tr(F(H) N^j) / (z - lambda)^{j+1}
/// together with its matrix-valued analogue F(H) N^j. With contact order r
/// at lambda the scalar pole order drops to at most m + 1 - r; the matrix
/// variant is where that bound is actually attained (take F with F(lambda)=0).
struct ModifiedResolvent {
    ScalarLaurent traced;
    LaurentExpansion matrix_valued;
    std::size_t traced_pole_order;
    std::size_t matrix_pole_order;
};

inline ModifiedResolvent modified_resolvent(const ExceptionalPoint& ep, const TruncSeries& G) {
    if (G.cap() + 1 < ep.order) throw CapTooSmall(G.cap(), ep.order);
    const std::size_t m = ep.order - 1;
    const ExactMatrix value = evaluate_series(G, ep.nilpotent_part);  // F(H) = G(N)

    ModifiedResolvent out{{ep.lambda, {}, 0}, {ep.lambda, {}, 0}, 0, 0};
    ExactMatrix power = ExactMatrix::identity(ep.dimension);
    for (std::size_t j = 0; j <= m; ++j) {
        const ExactMatrix coeff = value * power;
        out.matrix_valued.coeffs.push_back(coeff);
        out.traced.coeffs.push_back(coeff.trace());
        if (!coeff.is_zero()) out.matrix_valued.pole_order = j + 1;
        if (!coeff.trace().is_zero()) out.traced.pole_order = j + 1;
        if (j < m) power = power * ep.nilpotent_part;
    }
    out.traced_pole_order = out.traced.pole_order;
    out.matrix_pole_order = out.matrix_valued.pole_order;

    // Pole reduction re-derived on the result: with contact order r the
    // scalar coefficients vanish from degree m + 1 - r on (and from degree 1
    // on in any case, traces of nilpotents being zero).
    const std::size_t r = G.order();
    const std::size_t scalar_bound = (r != kInfiniteOrder && r <= m) ? (m + 1 - r) : 1;
    if (out.traced_pole_order > scalar_bound)
        throw std::logic_error("scalar pole order exceeds its reduction bound");
    return out;
}

/// Combined report for "what does F do to this exceptional point?".
struct EPReport {
    ExceptionalPoint ep;
    std::size_t contact_order;          // r of the recentered series
    std::size_t depth_before;           // m + 1
    std::size_t depth_bound_after;      // ceil((m+1)/r)
    std::size_t depth_effective_after;  // true index of F(H) - F(lambda) I
    bool annihilated;                   // F(H) == F(lambda) I
    std::size_t traced_pole_order;
    std::size_t matrix_pole_order;
    std::size_t pole_order_bound;       // m + 1 - r, clamped at 0
};

/// True iff the recentered coefficients 1..m all vanish; cross-checked by
/// literally evaluating F(H) - F(lambda) I.
inline bool annihilation_check(const ExceptionalPoint& ep, const TruncSeries& G) {
    if (G.cap() + 1 < ep.order) throw CapTooSmall(G.cap(), ep.order);
    const std::size_t r = G.order_up_to(ep.order - 1);
    const bool by_coeffs = (r == kInfiniteOrder);
    const ExactMatrix q =
        evaluate_series(G, ep.nilpotent_part) -
        G.constant_term() * ExactMatrix::identity(ep.dimension);
    if (by_coeffs != q.is_zero())
        throw std::logic_error("annihilation criterion disagrees with direct evaluation");
    return by_coeffs;
}

inline EPReport apply_function_at_ep(const ExceptionalPoint& ep, const TruncSeries& G) {
    if (G.cap() + 1 < ep.order) throw CapTooSmall(G.cap(), ep.order);
    const ExactMatrix value = evaluate_series(G, ep.nilpotent_part);
    const ExactMatrix q =
        value - G.constant_term() * ExactMatrix::identity(ep.dimension);

    const std::size_t r = G.order();
    const std::size_t bound = depth_bound(ep.order, r);
    const std::size_t effective = effective_index(q);
    const ModifiedResolvent resolvent = modified_resolvent(ep, G);

    const std::size_t clamped_bound =
        (r != kInfiniteOrder && r < ep.order) ? ep.order - r : 0;
    return {ep,      r,
            ep.order, bound,
            effective, q.is_zero(),
            resolvent.traced_pole_order, resolvent.matrix_pole_order,
            clamped_bound};
}

}  // namespace nilcalc

#endif
