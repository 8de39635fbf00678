/**
 * @file verify_suite.hpp
 * @brief Self-contained worked-example suite with embedded expected results.
 *
 * Eleven reference computations, all desk-checkable by hand: six series
 * evaluated at plain Jordan nilpotents and five functions applied to the
 * order-3 exceptional point H = 2I + J_3(0). For every case the suite
 * computes contact order, depth bound, effective index, and termination
 * mechanism, compares them against the embedded table, and additionally
 * checks the full value matrices where those are small enough to transcribe.
 * No files, no network: the exit of `nilcalc verify` depends on this alone.
 */
#ifndef NILCALC_VERIFY_SUITE_HPP
#define NILCALC_VERIFY_SUITE_HPP

#include <string>
#include <vector>

#include "nilcalc/depth.hpp"
#include "nilcalc/exceptional.hpp"
#include "nilcalc/matrix.hpp"
#include "nilcalc/nilpotent.hpp"
#include "nilcalc/series.hpp"

namespace nilcalc {

struct VerifyRow {
    std::string case_id;
    std::string function_desc;
    std::size_t contact_order;  // kInfiniteOrder allowed
    std::size_t bound;
    std::size_t effective;
    std::string mechanism;
};

struct VerifyReport {
    std::vector<VerifyRow> computed;
    std::vector<VerifyRow> expected;
    std::vector<std::string> mismatches;  // empty iff everything agreed
    bool ok = false;
};

namespace detail {

inline std::string order_str(std::size_t r) {
    return r == kInfiniteOrder ? "inf" : std::to_string(r);
}

inline void compare_rows(VerifyReport& rep) {
    for (std::size_t i = 0; i < rep.expected.size(); ++i) {
        const VerifyRow& want = rep.expected[i];
        const VerifyRow& got = rep.computed[i];
        auto complain = [&](const std::string& col, const std::string& w, const std::string& g) {
            rep.mismatches.push_back("case " + want.case_id + ": " + col + " expected " + w +
                                     ", computed " + g);
        };
        if (got.contact_order != want.contact_order)
            complain("contact order", order_str(want.contact_order), order_str(got.contact_order));
        if (got.bound != want.bound)
            complain("bound", std::to_string(want.bound), std::to_string(got.bound));
        if (got.effective != want.effective)
            complain("effective index", std::to_string(want.effective), std::to_string(got.effective));
        if (got.mechanism != want.mechanism) complain("mechanism", want.mechanism, got.mechanism);
    }
    rep.ok = rep.mismatches.empty();
}

inline GaussianRational q(long num, long den = 1) { return GaussianRational(Rational(num, den)); }

}  // namespace detail

inline VerifyReport run_verify_suite() {
    using detail::q;
    VerifyReport rep;

    const auto mechanism_of = [](const std::vector<GaussianRational>& upper,
                                 const std::vector<GaussianRational>& lower,
                                 const ExactMatrix& N) {
        return std::string(to_string(classify_termination(upper, lower, N).mechanism));
    };

    const auto check_matrix = [&rep](const std::string& case_id, const ExactMatrix& got,
                                     const ExactMatrix& want, const std::string& what) {
        if (got != want)
            rep.mismatches.push_back("case " + case_id + ": " + what +
                                     " deviates from the embedded matrix:\n" + got.str());
    };

    const ExactMatrix n3 = jordan_block(3);
    const ExactMatrix n4 = jordan_block(4);
    const ExactMatrix id3 = ExactMatrix::identity(3);
    const ExactMatrix id4 = ExactMatrix::identity(4);

    // --- plain nilpotent arguments ------------------------------------

    {   // confluent series with generic parameters: full depth survives
        const std::vector<GaussianRational> up{q(1)}, lo{q(2)};
        const DepthReport d = analyze_depth(TruncSeries::hypergeometric(up, lo, 2), n3);
        rep.computed.push_back({"kummer-generic", "1F1(1; 2; w)", d.contact_order, d.bound,
                                d.effective_index, mechanism_of(up, lo, n3)});
        rep.expected.push_back({"kummer-generic", "1F1(1; 2; w)", 1, 3, 3, "nilpotent"});
    }

    {   // series in w^2 at an index-4 nilpotent: depth halves, 4 -> 2
        const TruncSeries outer = TruncSeries::hypergeometric({}, {q(1)}, 3);
        const TruncSeries f = outer.compose(TruncSeries::monomial(2, 3));
        const DepthReport d = analyze_depth(f, n4);
        rep.computed.push_back({"bessel-squared", "0F1(; 1; w^2)", d.contact_order, d.bound,
                                d.effective_index, mechanism_of({}, {q(1)}, n4)});
        rep.expected.push_back({"bessel-squared", "0F1(; 1; w^2)", 2, 2, 2, "nilpotent"});
        check_matrix("bessel-squared", evaluate_series(f, n4), id4 + n4 * n4, "value I + N^2");
    }

    {   // zero upper parameter collapses the series to 1: total annihilation
        const std::vector<GaussianRational> up{q(0), q(2)}, lo{q(3)};
        const TruncSeries f = TruncSeries::hypergeometric(up, lo, 2);
        const DepthReport d = analyze_depth(f, n3);
        rep.computed.push_back({"gauss-zero-upper", "2F1(0, 2; 3; w)", d.contact_order, d.bound,
                                d.effective_index, mechanism_of(up, lo, n3)});
        rep.expected.push_back({"gauss-zero-upper", "2F1(0, 2; 3; w)", kInfiniteOrder, 0, 0, "mixed"});
        check_matrix("gauss-zero-upper", evaluate_series(f, n3), id3, "value I");
    }

    {   // generic parameters again, now with two upper entries
        const std::vector<GaussianRational> up{q(2), q(1)}, lo{q(3)};
        const DepthReport d = analyze_depth(TruncSeries::hypergeometric(up, lo, 2), n3);
        rep.computed.push_back({"gauss-generic", "2F1(2, 1; 3; w)", d.contact_order, d.bound,
                                d.effective_index, mechanism_of(up, lo, n3)});
        rep.expected.push_back({"gauss-generic", "2F1(2, 1; 3; w)", 1, 3, 3, "nilpotent"});
    }

    {   // upper parameter -1 truncates at degree 1, but the depth survives:
        // the value is I - (2/5)N, a nonzero multiple of N
        const std::vector<GaussianRational> up{q(-1), q(2)}, lo{q(5)};
        const TruncSeries f = TruncSeries::hypergeometric(up, lo, 2);
        const DepthReport d = analyze_depth(f, n3);
        rep.computed.push_back({"gauss-terminating", "2F1(-1, 2; 5; w)", d.contact_order, d.bound,
                                d.effective_index, mechanism_of(up, lo, n3)});
        rep.expected.push_back({"gauss-terminating", "2F1(-1, 2; 5; w)", 1, 3, 3, "mixed"});
        check_matrix("gauss-terminating", evaluate_series(f, n3), id3 - (q(2, 5) * n3),
                     "value I - (2/5)N");
    }

    {   // zero upper parameter in the confluent series
        const std::vector<GaussianRational> up{q(0)}, lo{q(2)};
        const TruncSeries f = TruncSeries::hypergeometric(up, lo, 2);
        const DepthReport d = analyze_depth(f, n3);
        rep.computed.push_back({"kummer-zero-upper", "1F1(0; 2; w)", d.contact_order, d.bound,
                                d.effective_index, mechanism_of(up, lo, n3)});
        rep.expected.push_back({"kummer-zero-upper", "1F1(0; 2; w)", kInfiniteOrder, 0, 0, "mixed"});
        check_matrix("kummer-zero-upper", evaluate_series(f, n3), id3, "value I");
    }

    // --- order-3 exceptional point at lambda = 2 ----------------------

    ExactMatrix h = jordan_block(3, q(2));
    const ExceptionalPoint ep = ep_decompose(h);

    {   // time evolution at t = 1: depth fully preserved
        const EPReport r = apply_function_at_ep(ep, TruncSeries::exp_scaled(q(1), 2));
        rep.computed.push_back({"ep-exp-evolution", "exp(1 (z - 2))", r.contact_order,
                                r.depth_bound_after, r.depth_effective_after, "nilpotent"});
        rep.expected.push_back({"ep-exp-evolution", "exp(1 (z - 2))", 1, 3, 3, "nilpotent"});
        check_matrix("ep-exp-evolution", evolution_at(ep, q(1)).polynomial_part,
                     ExactMatrix::from_rows({{q(1), q(1), q(1, 2)},
                                             {q(0), q(1), q(1)},
                                             {q(0), q(0), q(1)}}),
                     "evolution polynomial at t = 1");
    }

    {   // confluent series shifted to the eigenvalue
        const std::vector<GaussianRational> up{q(3)}, lo{q(5)};
        const TruncSeries g = TruncSeries::hypergeometric(up, lo, 2);
        const EPReport r = apply_function_at_ep(ep, g);
        rep.computed.push_back({"ep-kummer", "1F1(3; 5; z - 2)", r.contact_order,
                                r.depth_bound_after, r.depth_effective_after,
                                mechanism_of(up, lo, ep.nilpotent_part)});
        rep.expected.push_back({"ep-kummer", "1F1(3; 5; z - 2)", 1, 3, 3, "nilpotent"});
        const ExactMatrix value = evaluate_series(g, ep.nilpotent_part);
        check_matrix("ep-kummer", value,
                     ExactMatrix::from_rows({{q(1), q(3, 5), q(1, 5)},
                                             {q(0), q(1), q(3, 5)},
                                             {q(0), q(0), q(1)}}),
                     "value");
        const ExactMatrix qpart = value - id3;
        check_matrix("ep-kummer", qpart * qpart,
                     ExactMatrix::from_rows({{q(0), q(0), q(9, 25)},
                                             {q(0), q(0), q(0)},
                                             {q(0), q(0), q(0)}}),
                     "square of the nilpotent part");
        check_matrix("ep-kummer", qpart * qpart * qpart, ExactMatrix(3),
                     "cube of the nilpotent part");
    }

    {   // quadratic with a critical point at the eigenvalue: depth 3 -> 2
        const TruncSeries g =
            TruncSeries::recentered_polynomial({q(5), q(-4), q(1)}, q(2), 2);
        const EPReport r = apply_function_at_ep(ep, g);
        rep.computed.push_back({"ep-quadratic", "1 + (z - 2)^2", r.contact_order,
                                r.depth_bound_after, r.depth_effective_after, "nilpotent"});
        rep.expected.push_back({"ep-quadratic", "1 + (z - 2)^2", 2, 2, 2, "nilpotent"});
        check_matrix("ep-quadratic", evaluate_series(g, ep.nilpotent_part),
                     id3 + ep.nilpotent_part * ep.nilpotent_part, "value I + N^2");
    }

    {   // cubic vanishing to order 3: complete annihilation
        const TruncSeries g =
            TruncSeries::recentered_polynomial({q(-8), q(12), q(-6), q(1)}, q(2), 3);
        const EPReport r = apply_function_at_ep(ep, g);
        rep.computed.push_back({"ep-cubic", "(z - 2)^3", r.contact_order, r.depth_bound_after,
                                r.depth_effective_after, "nilpotent"});
        rep.expected.push_back({"ep-cubic", "(z - 2)^3", 3, 1, 0, "nilpotent"});
        check_matrix("ep-cubic", evaluate_series(g, ep.nilpotent_part), ExactMatrix(3),
                     "value (must vanish)");
    }

    {   // terminating series at the eigenvalue: mixed mechanism, full depth
        const std::vector<GaussianRational> up{q(-1), q(4)}, lo{q(3)};
        const TruncSeries g = TruncSeries::hypergeometric(up, lo, 2);
        const EPReport r = apply_function_at_ep(ep, g);
        rep.computed.push_back({"ep-gauss-mixed", "2F1(-1, 4; 3; z - 2)", r.contact_order,
                                r.depth_bound_after, r.depth_effective_after,
                                mechanism_of(up, lo, ep.nilpotent_part)});
        rep.expected.push_back({"ep-gauss-mixed", "2F1(-1, 4; 3; z - 2)", 1, 3, 3, "mixed"});
        check_matrix("ep-gauss-mixed", evaluate_series(g, ep.nilpotent_part),
                     id3 - (q(4, 3) * ep.nilpotent_part), "value I - (4/3)N");
    }

    detail::compare_rows(rep);
    return rep;
}

}  // namespace nilcalc

#endif
