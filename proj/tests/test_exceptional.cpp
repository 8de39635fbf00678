#include <catch2/catch_amalgamated.hpp>

#include "nilcalc/exceptional.hpp"
#include "nilcalc/random_gen.hpp"

using namespace nilcalc;

namespace {

GaussianRational q(long num, long den = 1) { return GaussianRational(Rational(num, den)); }

ExceptionalPoint random_ep(RandomGen& rng, std::size_t max_n, std::size_t min_order = 1) {
    for (;;) {
        const ExactMatrix n = rng.nilpotent(max_n);
        if (nilpotency_index(n).index < min_order) continue;
        const GaussianRational lambda = rng.gaussian();
        return ep_decompose(lambda * ExactMatrix::identity(n.dim()) + n);
    }
}

}  // namespace

TEST_CASE("eigenvalue-plus-nilpotent decomposition") {
    const ExactMatrix h = jordan_block(3, q(2));
    const ExceptionalPoint ep = ep_decompose(h);
    CHECK(ep.lambda == q(2));
    CHECK(ep.order == 3);
    CHECK(ep.dimension == 3);
    CHECK(ep.nilpotent_part == jordan_block(3));

    const ExactMatrix diag = ExactMatrix::from_rows({{q(1), q(0)}, {q(0), q(2)}});
    CHECK_THROWS_AS(ep_decompose(diag), NotExceptionalPoint);

    const ExceptionalPoint scalar = ep_decompose(q(5) * ExactMatrix::identity(2));
    CHECK(scalar.order == 1);
    CHECK(scalar.lambda == q(5));
}

TEST_CASE("decomposition round-trips on random inputs") {
    RandomGen rng(666);
    for (int trial = 0; trial < 80; ++trial) {
        const ExactMatrix n = rng.nilpotent(6);
        const GaussianRational lambda = rng.gaussian();
        const ExceptionalPoint ep =
            ep_decompose(lambda * ExactMatrix::identity(n.dim()) + n);
        CHECK(ep.lambda == lambda);
        CHECK(ep.nilpotent_part == n);
        CHECK(ep.order == nilpotency_index(n).index);
    }
}

TEST_CASE("two-level gain-loss matrix at and off the coalescence threshold") {
    // kappa = gamma: eigenvalues coalesce, order-2 exceptional point
    const ExactMatrix at_threshold = pt_symmetric_2x2(Rational(0), Rational(1), Rational(1));
    const ExceptionalPoint ep = ep_decompose(at_threshold);
    CHECK(ep.lambda == q(0));
    CHECK(ep.order == 2);
    CHECK(ep.nilpotent_part.at(0, 0) == GaussianRational(Rational(0), Rational(-1)));

    // kappa != gamma: two distinct eigenvalues, the square of the remainder
    // is (kappa^2 - gamma^2) I != 0
    const ExactMatrix off = pt_symmetric_2x2(Rational(0), Rational(1), Rational(2));
    CHECK_THROWS_AS(ep_decompose(off), NotExceptionalPoint);
    const ExactMatrix sq = off * off;
    CHECK(sq == q(3) * ExactMatrix::identity(2));

    // kappa = gamma = 0: scalar matrix, order 1
    CHECK(ep_decompose(pt_symmetric_2x2(Rational(5), Rational(0), Rational(0))).order == 1);
}

TEST_CASE("applying functions at an order-3 exceptional point") {
    const ExceptionalPoint ep = ep_decompose(jordan_block(3, q(2)));

    const EPReport quadratic = apply_function_at_ep(ep, TruncSeries(2, {q(1), q(0), q(1)}));
    CHECK(quadratic.contact_order == 2);
    CHECK(quadratic.depth_before == 3);
    CHECK(quadratic.depth_bound_after == 2);
    CHECK(quadratic.depth_effective_after == 2);
    CHECK_FALSE(quadratic.annihilated);
    CHECK(quadratic.pole_order_bound == 1);
    CHECK(quadratic.traced_pole_order == 1);

    const EPReport cubic = apply_function_at_ep(ep, TruncSeries::monomial(3, 3));
    CHECK(cubic.contact_order == 3);
    CHECK(cubic.depth_bound_after == 1);
    CHECK(cubic.depth_effective_after == 0);
    CHECK(cubic.annihilated);

    // the recentered characteristic polynomial (z - 2)^3 annihilates H
    const TruncSeries char_poly =
        TruncSeries::recentered_polynomial({q(-8), q(12), q(-6), q(1)}, q(2), 3);
    CHECK(evaluate_series(char_poly, ep.nilpotent_part).is_zero());

    CHECK_THROWS_AS(apply_function_at_ep(ep, TruncSeries::constant(q(1), 1)), CapTooSmall);
}

TEST_CASE("depth reduction at random exceptional points") {
    RandomGen rng(770);
    for (int trial = 0; trial < 100; ++trial) {
        const ExceptionalPoint ep = random_ep(rng, 6);
        const std::size_t cap = ep.order - 1 + rng.below(3);
        const TruncSeries g = rng.series(cap);
        const EPReport rep = apply_function_at_ep(ep, g);
        CHECK(rep.depth_effective_after <= rep.depth_bound_after);
        CHECK(rep.depth_bound_after <= rep.depth_before);
        CHECK(rep.annihilated == (rep.contact_order >= ep.order));
        CHECK(rep.annihilated == (rep.depth_effective_after == 0));
        if (rep.contact_order == 1) CHECK(rep.depth_bound_after == ep.order);
    }
}

TEST_CASE("quadratic contact at an order-4 exceptional point") {
    const ExceptionalPoint ep = ep_decompose(jordan_block(4, q(3)));
    const TruncSeries g =
        TruncSeries::recentered_polynomial({q(10), q(-6), q(1)}, q(3), 3);  // 1 + (z-3)^2
    CHECK(g == TruncSeries(3, {q(1), q(0), q(1), q(0)}));

    const EPReport rep = apply_function_at_ep(ep, g);
    CHECK(rep.contact_order == 2);
    CHECK(rep.depth_before == 4);
    CHECK(rep.depth_bound_after == 2);
    CHECK(rep.depth_effective_after == 2);
    CHECK_FALSE(rep.annihilated);
    CHECK(rep.pole_order_bound == 2);

    const ModifiedResolvent mr = modified_resolvent(ep, g);
    REQUIRE(mr.traced.coeffs.size() == 4);
    CHECK(mr.traced.coeffs[0] == q(4));
    CHECK(mr.traced.coeffs[1] == q(0));
    CHECK(mr.traced.coeffs[2] == q(0));
    CHECK(mr.traced.coeffs[3] == q(0));
    CHECK(mr.traced_pole_order == 1);
    CHECK(mr.matrix_pole_order == 4);  // (I + N^2) N^3 = N^3 is still nonzero
}

TEST_CASE("annihilation criterion, both directions") {
    const ExceptionalPoint ep = ep_decompose(jordan_block(3, q(2)));
    CHECK(annihilation_check(ep, TruncSeries::monomial(3, 3)));
    CHECK_FALSE(annihilation_check(ep, TruncSeries(2, {q(1), q(0), q(1)})));
    CHECK_FALSE(annihilation_check(ep, TruncSeries(2, {q(4), q(1, 7), q(0)})));

    RandomGen rng(777);
    for (int trial = 0; trial < 80; ++trial) {
        const ExceptionalPoint rep = random_ep(rng, 5);
        const std::size_t cap = rep.order - 1 + rng.below(2);
        const TruncSeries g = rng.series(cap);
        bool coeffs_vanish = true;
        for (std::size_t j = 1; j < rep.order; ++j)
            if (!g[j].is_zero()) coeffs_vanish = false;
        CHECK(annihilation_check(rep, g) == coeffs_vanish);
    }
}

TEST_CASE("time evolution polynomial") {
    const ExceptionalPoint ep = ep_decompose(jordan_block(3, q(2)));
    const EvolutionPolynomial evo = time_evolution(ep);
    REQUIRE(evo.matrix_coeffs.size() == 3);
    CHECK(evo.lambda == q(2));
    CHECK(evo.matrix_coeffs[0] == ExactMatrix::identity(3));
    CHECK(evo.matrix_coeffs[1] == ep.nilpotent_part);
    CHECK(evo.matrix_coeffs[2] == q(1, 2) * (ep.nilpotent_part * ep.nilpotent_part));
    CHECK_FALSE(evo.matrix_coeffs[2].is_zero());

    const ExceptionalPoint scalar = ep_decompose(q(7) * ExactMatrix::identity(2));
    CHECK(time_evolution(scalar).matrix_coeffs.size() == 1);

    // gain-loss two-level system: U(t) = exp(omega t)(I + t N)
    const ExceptionalPoint pt = ep_decompose(pt_symmetric_2x2(Rational(0), Rational(1), Rational(1)));
    const EvolutionPolynomial pte = time_evolution(pt);
    REQUIRE(pte.matrix_coeffs.size() == 2);
    CHECK(pte.matrix_coeffs[0] == ExactMatrix::identity(2));
    CHECK(pte.matrix_coeffs[1] == pt.nilpotent_part);
}

TEST_CASE("evolution at concrete times") {
    const ExceptionalPoint ep = ep_decompose(jordan_block(3, q(2)));

    const EvolutionSample at1 = evolution_at(ep, q(1));
    CHECK(at1.prefactor_exponent == q(2));
    CHECK(at1.polynomial_part == ExactMatrix::from_rows({{q(1), q(1), q(1, 2)},
                                                         {q(0), q(1), q(1)},
                                                         {q(0), q(0), q(1)}}));

    const EvolutionSample at0 = evolution_at(ep, q(0));
    CHECK(at0.polynomial_part == ExactMatrix::identity(3));
    CHECK(at0.prefactor_exponent == q(0));
}

TEST_CASE("evolution preserves the full depth for every nonzero time") {
    RandomGen rng(888);
    for (int trial = 0; trial < 60; ++trial) {
        const ExceptionalPoint ep = random_ep(rng, 6, 2);
        GaussianRational t = GaussianRational(rng.nonzero_rational());
        const EvolutionSample sample = evolution_at(ep, t);
        const ExactMatrix diff =
            sample.polynomial_part - ExactMatrix::identity(ep.dimension);
        CHECK(effective_index(diff) == ep.order);
        CHECK(effective_index(evolution_at(ep, q(0)).polynomial_part -
                              ExactMatrix::identity(ep.dimension)) == 0);
    }
}

TEST_CASE("resolvent expansion and its defining identity") {
    const ExceptionalPoint ep = ep_decompose(jordan_block(3, q(2)));
    const LaurentExpansion lau = resolvent_expansion(ep);
    REQUIRE(lau.coeffs.size() == 3);
    CHECK(lau.pole_order == 3);
    CHECK(lau.coeffs[0] == ExactMatrix::identity(3));
    CHECK(lau.coeffs[1] == ep.nilpotent_part);
    CHECK(lau.coeffs[2] == ep.nilpotent_part * ep.nilpotent_part);

    const LaurentExpansion scalar = resolvent_expansion(ep_decompose(q(4) * ExactMatrix::identity(2)));
    CHECK(scalar.pole_order == 1);
    CHECK(scalar.coeffs.size() == 1);

    // (zI - H) * sum_j N^j (z - lambda)^{-(j+1)} = I at rational sample points
    RandomGen rng(999);
    for (int trial = 0; trial < 40; ++trial) {
        const ExceptionalPoint rep = random_ep(rng, 5);
        const LaurentExpansion l = resolvent_expansion(rep);
        const ExactMatrix h = rep.lambda * ExactMatrix::identity(rep.dimension) + rep.nilpotent_part;
        for (long offset = 1; offset <= 3; ++offset) {
            const GaussianRational z = rep.lambda + q(offset);
            ExactMatrix sum(rep.dimension);
            GaussianRational pole = (z - rep.lambda).inverse();  // (z-lambda)^{-(j+1)}
            for (std::size_t j = 0; j < l.coeffs.size(); ++j) {
                sum = sum + pole * l.coeffs[j];
                pole = pole * (z - rep.lambda).inverse();
            }
            CHECK((z * ExactMatrix::identity(rep.dimension) - h) * sum ==
                  ExactMatrix::identity(rep.dimension));
        }
    }
}

TEST_CASE("modified resolvent: scalar trace and matrix-valued data") {
    const ExceptionalPoint ep = ep_decompose(jordan_block(3, q(2)));

    {   // contact order 2 with nonzero value at the eigenvalue
        const ModifiedResolvent mr = modified_resolvent(ep, TruncSeries(2, {q(1), q(0), q(1)}));
        REQUIRE(mr.traced.coeffs.size() == 3);
        CHECK(mr.traced.coeffs[0] == q(3));
        CHECK(mr.traced.coeffs[1] == q(0));
        CHECK(mr.traced.coeffs[2] == q(0));
        CHECK(mr.traced_pole_order == 1);
        CHECK(mr.matrix_pole_order == 3);  // (I + N^2) N^2 still lights up degree 2
    }

    {   // vanishing value at the eigenvalue: the matrix variant attains m+1-r
        const ModifiedResolvent w2 = modified_resolvent(ep, TruncSeries::monomial(2, 2));
        CHECK(w2.matrix_pole_order == 1);   // coefficients N^2, 0, 0
        CHECK(w2.traced_pole_order == 0);   // every trace vanishes

        const ModifiedResolvent w1 = modified_resolvent(ep, TruncSeries::monomial(1, 2));
        CHECK(w1.matrix_pole_order == 2);   // coefficients N, N^2, 0
        CHECK(w1.traced_pole_order == 0);
    }

    {   // constant function: plain resolvent numbers
        const ModifiedResolvent mr = modified_resolvent(ep, TruncSeries::constant(q(1), 2));
        CHECK(mr.traced.coeffs[0] == q(3));
        CHECK(mr.traced_pole_order == 1);
        CHECK(mr.matrix_pole_order == 3);
    }

    CHECK_THROWS_AS(modified_resolvent(ep, TruncSeries::constant(q(1), 1)), CapTooSmall);
}

TEST_CASE("scalar response poles never survive past the first coefficient") {
    RandomGen rng(1111);
    for (int trial = 0; trial < 80; ++trial) {
        const ExceptionalPoint ep = random_ep(rng, 5);
        const std::size_t cap = ep.order - 1 + rng.below(2);
        const TruncSeries g = rng.series(cap);
        const ModifiedResolvent mr = modified_resolvent(ep, g);
        // traces of F(H) N^j with j >= 1 are traces of nilpotent sums: zero
        for (std::size_t j = 1; j < mr.traced.coeffs.size(); ++j)
            CHECK(mr.traced.coeffs[j] == q(0));
        CHECK(mr.traced_pole_order <= 1);
        CHECK((mr.traced_pole_order == 0) == g[0].is_zero());
    }
}

TEST_CASE("pole reduction bound for contact orders within the depth") {
    RandomGen rng(1212);
    for (int trial = 0; trial < 80; ++trial) {
        const ExceptionalPoint ep = random_ep(rng, 6, 2);
        const std::size_t m = ep.order - 1;
        const std::size_t r = 1 + rng.below(m);  // 1 <= r <= m
        const TruncSeries g = rng.series_with_order(m, r);
        const ModifiedResolvent mr = modified_resolvent(ep, g);
        CHECK(mr.traced_pole_order <= m + 1 - r);
        const EPReport rep = apply_function_at_ep(ep, g);
        CHECK(rep.pole_order_bound == m + 1 - r);
        CHECK(rep.traced_pole_order <= rep.pole_order_bound);
    }
}

TEST_CASE("trace of a transformed exceptional point is n times the value at lambda") {
    RandomGen rng(1313);
    for (int trial = 0; trial < 60; ++trial) {
        const ExceptionalPoint ep = random_ep(rng, 5);
        std::vector<GaussianRational> upper, lower;
        const std::size_t p = rng.below(3), s = rng.below(2);
        for (std::size_t i = 0; i < p; ++i) upper.push_back(rng.gaussian());
        for (std::size_t i = 0; i < s; ++i) lower.push_back(GaussianRational(Rational(1 + (long)rng.below(5), 2)));
        const TruncSeries g = TruncSeries::hypergeometric(upper, lower, ep.order - 1);
        const ExactMatrix value = evaluate_series(g, ep.nilpotent_part);
        CHECK(value.trace() ==
              GaussianRational(Rational(static_cast<long>(ep.dimension))) * g[0]);
        CHECK(g[0] == q(1));
    }
}
