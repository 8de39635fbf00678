/**
 * @file depth.hpp
 * @brief The nilpotent depth criterion: how many Jordan levels survive F?
 *
 * Write F = c_0 + c_r x^r + ... with c_r != 0 (r is the contact order, the
 * order of the non-constant part). For N of nilpotency index m + 1 the
 * nilpotent part Q = F(N) - c_0 I factors as N^r H(N), so Q^k vanishes as
 * soon as r k >= m + 1 and the index of Q is at most ceil((m+1)/r). The
 * analysis below computes the bound, the true effective index, and whether
 * the bound is attained.
 *
 * Conventions, chosen once and used everywhere:
 *   - the effective index of the zero matrix is reported as 0, which keeps
 *     "total annihilation" distinct from "index 1";
 *   - the bound for an (up to its cap) constant series is 0 for the same
 *     reason;
 *   - the depth bound uses the ceiling ceil((m+1)/r).
 */
#ifndef NILCALC_DEPTH_HPP
#define NILCALC_DEPTH_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nilcalc/errors.hpp"
#include "nilcalc/hypergeometric.hpp"
#include "nilcalc/matrix.hpp"
#include "nilcalc/nilpotent.hpp"
#include "nilcalc/series.hpp"

namespace nilcalc {

/// ceil(m_plus_1 / r); 0 when r is infinite (no non-constant part at all).
inline std::size_t depth_bound(std::size_t m_plus_1, std::size_t r) {
    if (r == kInfiniteOrder) return 0;
    if (m_plus_1 == 0) return 0;
    return (m_plus_1 + r - 1) / r;
}

/// Smallest s >= 1 with Q^s = 0, except 0 for the zero matrix.
inline std::size_t effective_index(const ExactMatrix& Q) {
    if (Q.is_zero()) return 0;
    return nilpotency_index(Q).index;
}

struct DepthReport {
    std::size_t m_plus_1;        // nilpotency index of the input
    std::size_t contact_order;   // r, or kInfiniteOrder
    std::size_t bound;           // ceil((m+1)/r), 0 for infinite r
    std::size_t effective_index; // true index of Q = F(N) - c0 I (0 when Q = 0)
    bool sharp;                  // effective_index == bound
};

/// Full depth analysis of F at N. Also re-derives the vanishing guarantee
/// Q^k = 0 for every k with r k >= m + 1 directly on the computed Q; a
/// violation cannot happen mathematically and would signal a defect.
inline DepthReport analyze_depth(const TruncSeries& F, const ExactMatrix& N) {
    const NilpotencyCertificate cert = nilpotency_index(N);
    const std::size_t m_plus_1 = cert.index;
    if (F.cap() + 1 < m_plus_1) throw CapTooSmall(F.cap(), m_plus_1);

    const std::size_t r = F.order();
    const ExactMatrix Q =
        evaluate_series(F, N) - F.constant_term() * ExactMatrix::identity(N.dim());
    const std::size_t bound = depth_bound(m_plus_1, r);
    const std::size_t effective = effective_index(Q);

    if (r == kInfiniteOrder) {
        if (!Q.is_zero()) throw std::logic_error("constant series must annihilate the nilpotent part");
    } else {
        for (std::size_t k = 1; k <= m_plus_1; ++k)
            if (r * k >= m_plus_1 && !Q.pow(k).is_zero())
                throw std::logic_error("depth bound violated: Q^k != 0 with r k >= m+1");
    }

    return {m_plus_1, r, bound, effective, effective == bound};
}

enum class TerminationMechanism { parameter, nilpotent, mixed, none };

inline const char* to_string(TerminationMechanism m) {
    switch (m) {
        case TerminationMechanism::parameter: return "parameter";
        case TerminationMechanism::nilpotent: return "nilpotent";
        case TerminationMechanism::mixed: return "mixed";
        default: return "none";
    }
}

/// Why does pFq(upper; lower; N) have finitely many terms? Either because an
/// upper parameter is a non-positive integer -k (coefficients with j > k
/// vanish), or because N^{m+1} = 0 (powers with j > m vanish), or both.
struct TerminationClassification {
    TerminationMechanism mechanism;
    std::optional<std::size_t> parameter_cutoff;  // smallest k with some upper a = -k
    std::size_t nilpotent_cutoff;                 // m
    std::size_t effective_cutoff;                 // last degree that can contribute
};

inline TerminationClassification classify_termination(const std::vector<GaussianRational>& upper,
                                                      const std::vector<GaussianRational>& lower,
                                                      const ExactMatrix& N) {
    const NilpotencyCertificate cert = nilpotency_index(N);
    const std::size_t m = cert.index - 1;
    if (auto v = validate_lower_params(lower, m))
        throw ZeroLowerPochhammer(v->param_index, v->degree);

    std::optional<std::size_t> param_cutoff;
    for (const auto& a : upper) {
        if (!is_nonpositive_integer(a)) continue;
        const std::size_t k =
            static_cast<std::size_t>(mpz_get_ui(mpz_class(-a.re().numerator()).get_mpz_t()));
        if (!param_cutoff || k < *param_cutoff) param_cutoff = k;
    }

    if (param_cutoff)
        return {TerminationMechanism::mixed, param_cutoff, m, std::min(*param_cutoff, m)};
    return {TerminationMechanism::nilpotent, std::nullopt, m, m};
}

/// Depth of a composition F(G(N)) with G(0) = 0. Both the coarse two-stage
/// bound and the refined bound through the actual index of G(N) are computed
/// and checked against the true effective index.
struct CompositionBound {
    std::size_t mu_plus_1;      // effective nilpotency index of G(N)
    std::size_t coarse_bound;   // ceil(ceil((m+1)/s) / r)
    std::size_t refined_bound;  // ceil((mu+1)/r)
    std::size_t effective;      // true index of F(G(N)) - c0 I
};

inline CompositionBound composition_bound(const TruncSeries& F, const TruncSeries& G,
                                          const ExactMatrix& N) {
    if (!G.constant_term().is_zero()) throw NonzeroConstantInner();
    const NilpotencyCertificate cert = nilpotency_index(N);
    const std::size_t m_plus_1 = cert.index;
    if (G.cap() + 1 < m_plus_1) throw CapTooSmall(G.cap(), m_plus_1);

    const std::size_t r = F.order();
    const std::size_t s = G.order();

    const ExactMatrix inner = evaluate_series(G, N);
    const std::size_t mu_plus_1 = effective_index(inner);
    if (F.cap() + 1 < std::max<std::size_t>(mu_plus_1, 1))
        throw CapTooSmall(F.cap(), mu_plus_1);

    const ExactMatrix Q =
        evaluate_series(F, inner) - F.constant_term() * ExactMatrix::identity(N.dim());
    const std::size_t effective = effective_index(Q);

    const std::size_t refined = depth_bound(mu_plus_1, r);
    const std::size_t coarse = depth_bound(depth_bound(m_plus_1, s), r);
    if (effective > refined || refined > coarse)
        throw std::logic_error("composition depth chain violated");
    return {mu_plus_1, coarse, refined, effective};
}

}  // namespace nilcalc

#endif
