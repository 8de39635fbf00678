#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "nilcalc/depth.hpp"
#include "nilcalc/random_gen.hpp"
#include "nilcalc/scan.hpp"

using namespace nilcalc;

namespace {

GaussianRational q(long num, long den = 1) { return GaussianRational(Rational(num, den)); }

}  // namespace

TEST_CASE("depth bound ceil((m+1)/r)") {
    CHECK(depth_bound(3, 1) == 3);
    CHECK(depth_bound(3, 2) == 2);
    CHECK(depth_bound(3, 3) == 1);
    CHECK(depth_bound(4, 2) == 2);
    for (std::size_t m_plus_1 = 3; m_plus_1 <= 9; ++m_plus_1)
        CHECK(depth_bound(m_plus_1, m_plus_1 - 1) == 2);  // r = m compresses to one level
    CHECK(depth_bound(5, kInfiniteOrder) == 0);
    CHECK(depth_bound(5, 7) == 1);
}

TEST_CASE("effective index distinguishes the zero matrix") {
    const ExactMatrix n3 = jordan_block(3);
    CHECK(effective_index(q(-4, 3) * n3) == 3);
    CHECK(effective_index(n3 * n3) == 2);
    CHECK(effective_index(ExactMatrix(3)) == 0);
    CHECK_THROWS_AS(effective_index(ExactMatrix::identity(2)), NotNilpotent);
}

TEST_CASE("depth analysis of worked series") {
    const ExactMatrix n3 = jordan_block(3);

    const DepthReport kummer = analyze_depth(TruncSeries::hypergeometric({q(3)}, {q(5)}, 2), n3);
    CHECK(kummer.m_plus_1 == 3);
    CHECK(kummer.contact_order == 1);
    CHECK(kummer.bound == 3);
    CHECK(kummer.effective_index == 3);
    CHECK(kummer.sharp);

    const DepthReport quadratic = analyze_depth(TruncSeries(2, {q(1), q(0), q(1)}), n3);
    CHECK(quadratic.contact_order == 2);
    CHECK(quadratic.bound == 2);
    CHECK(quadratic.effective_index == 2);
    CHECK(quadratic.sharp);

    // a cubic on an index-3 nilpotent annihilates everything; the bound
    // formula still gives 1 while the reported index of zero is 0
    const DepthReport cubic = analyze_depth(TruncSeries::monomial(3, 3), n3);
    CHECK(cubic.contact_order == 3);
    CHECK(cubic.bound == 1);
    CHECK(cubic.effective_index == 0);
    CHECK_FALSE(cubic.sharp);

    const DepthReport constant = analyze_depth(TruncSeries::constant(q(7), 4), n3);
    CHECK(constant.contact_order == kInfiniteOrder);
    CHECK(constant.bound == 0);
    CHECK(constant.effective_index == 0);
    CHECK(constant.sharp);

    CHECK_THROWS_AS(analyze_depth(TruncSeries::constant(q(1), 1), n3), CapTooSmall);
}

TEST_CASE("vanishing guarantee and bound, randomized") {
    RandomGen rng(555);
    for (int trial = 0; trial < 150; ++trial) {
        const ExactMatrix n = rng.nilpotent(6);
        const std::size_t m_plus_1 = nilpotency_index(n).index;
        const std::size_t cap = m_plus_1 - 1 + rng.below(3);
        const TruncSeries f = rng.series(cap);
        const DepthReport rep = analyze_depth(f, n);  // re-derives Q^k = 0 internally

        CHECK(rep.effective_index <= rep.bound);
        CHECK(rep.bound <= rep.m_plus_1);
        if (rep.contact_order == 1) CHECK(rep.bound == m_plus_1);
        if (rep.contact_order > m_plus_1 - 1) CHECK(rep.effective_index == 0);
    }
}

TEST_CASE("full Jordan blocks attain the bound whenever c_r is nonzero") {
    RandomGen rng(556);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + rng.below(5);
        const std::size_t r = 1 + rng.below(n - 1);  // r <= m
        const TruncSeries f = rng.series_with_order(n - 1, r);
        const DepthReport rep = analyze_depth(f, jordan_block(n));
        CHECK(rep.effective_index == rep.bound);
        CHECK(rep.sharp);
    }
}

TEST_CASE("nilpotent part factors as N^r H(N)") {
    RandomGen rng(557);
    for (int trial = 0; trial < 80; ++trial) {
        const ExactMatrix n = rng.nilpotent(5);
        const std::size_t m = nilpotency_index(n).index - 1;
        const std::size_t cap = m + rng.below(2);
        const TruncSeries f = rng.series(cap);
        const std::size_t r = f.order();
        if (r == kInfiniteOrder) continue;

        const ExactMatrix value = evaluate_series(f, n);
        const ExactMatrix big_q = value - f[0] * ExactMatrix::identity(n.dim());

        // H(N) = sum_{j >= r} c_j N^{j-r}, reconstructed explicitly
        ExactMatrix h(n.dim());
        ExactMatrix power = ExactMatrix::identity(n.dim());
        for (std::size_t j = r; j <= cap; ++j) {
            h = h + f[j] * power;
            power = power * n;
        }
        CHECK(big_q == n.pow(r) * h);
    }
}

TEST_CASE("termination classification") {
    const ExactMatrix n3 = jordan_block(3);

    const auto mixed = classify_termination({q(-1), q(4)}, {q(3)}, n3);
    CHECK(mixed.mechanism == TerminationMechanism::mixed);
    REQUIRE(mixed.parameter_cutoff.has_value());
    CHECK(*mixed.parameter_cutoff == 1);
    CHECK(mixed.nilpotent_cutoff == 2);
    CHECK(mixed.effective_cutoff == 1);

    const auto plain = classify_termination({q(3)}, {q(5)}, n3);
    CHECK(plain.mechanism == TerminationMechanism::nilpotent);
    CHECK_FALSE(plain.parameter_cutoff.has_value());
    CHECK(plain.effective_cutoff == 2);

    const auto far = classify_termination({q(-5)}, {q(2)}, n3);
    CHECK(far.mechanism == TerminationMechanism::mixed);
    CHECK(*far.parameter_cutoff == 5);
    CHECK(far.effective_cutoff == 2);  // min(5, m) with m = 2

    // a zero upper parameter is the cutoff k = 0
    const auto zero_upper = classify_termination({q(0), q(2)}, {q(3)}, n3);
    CHECK(zero_upper.mechanism == TerminationMechanism::mixed);
    CHECK(*zero_upper.parameter_cutoff == 0);
    CHECK(zero_upper.effective_cutoff == 0);

    // non-integer and complex upper parameters never terminate
    const auto frac = classify_termination({q(-7, 2)}, {q(3)}, n3);
    CHECK(frac.mechanism == TerminationMechanism::nilpotent);

    CHECK_THROWS_AS(classify_termination({q(1)}, {q(-1)}, n3), ZeroLowerPochhammer);
}

TEST_CASE("composition depth: worked instances at an index-5 block") {
    const ExactMatrix n5 = jordan_block(5);

    // F = 1 + x (contact order 1), G = x^2: G(N) = N^2 has index 3
    const CompositionBound a =
        composition_bound(TruncSeries(4, {q(1), q(1), q(0), q(0), q(0)}),
                          TruncSeries::monomial(2, 4), n5);
    CHECK(a.mu_plus_1 == 3);
    CHECK(a.refined_bound == 3);
    CHECK(a.coarse_bound == 3);
    CHECK(a.effective == 3);

    // F = 1 + x^2, G = x^2: the value is I + N^4, one surviving level
    const CompositionBound b =
        composition_bound(TruncSeries(4, {q(1), q(0), q(1), q(0), q(0)}),
                          TruncSeries::monomial(2, 4), n5);
    CHECK(b.mu_plus_1 == 3);
    CHECK(b.refined_bound == 2);
    CHECK(b.coarse_bound == 2);
    CHECK(b.effective == 2);

    // G = x reduces to plain depth analysis
    RandomGen rng(558);
    for (int trial = 0; trial < 30; ++trial) {
        const TruncSeries f = rng.series(4);
        const CompositionBound c = composition_bound(f, TruncSeries::monomial(1, 4), n5);
        const DepthReport d = analyze_depth(f, n5);
        CHECK(c.mu_plus_1 == 5);
        CHECK(c.effective == d.effective_index);
        CHECK(c.refined_bound == d.bound);
    }

    CHECK_THROWS_AS(
        composition_bound(TruncSeries(4, {q(1), q(1), q(0), q(0), q(0)}),
                          TruncSeries::constant(q(1), 4), n5),
        NonzeroConstantInner);
}

TEST_CASE("composition depth chain, randomized") {
    RandomGen rng(559);
    for (int trial = 0; trial < 100; ++trial) {
        const ExactMatrix n = rng.nilpotent(6);
        const std::size_t m = nilpotency_index(n).index - 1;
        const std::size_t cap = m + rng.below(2);
        const TruncSeries f = rng.series(cap);
        TruncSeries g = rng.series(cap);
        std::vector<GaussianRational> gc = g.coeffs();
        gc[0] = GaussianRational(0);
        g = TruncSeries(cap, gc);

        // the chain effective <= refined <= coarse is re-derived inside
        const CompositionBound cb = composition_bound(f, g, n);
        CHECK(cb.effective <= cb.refined_bound);
        CHECK(cb.refined_bound <= cb.coarse_bound);
        CHECK(cb.mu_plus_1 <= depth_bound(m + 1, g.order()));
    }
}

TEST_CASE("nested ceiling division collapses to a single ceiling") {
    // ceil(ceil(a/s)/r) = ceil(a/(s r)) for positive integers: the two-stage
    // coarse bound can never exceed the flat one, so any gain over the flat
    // formula must come from the refined bound through the true inner index.
    for (std::size_t a = 1; a <= 40; ++a)
        for (std::size_t s = 1; s <= 12; ++s)
            for (std::size_t r = 1; r <= 12; ++r)
                CHECK(depth_bound(depth_bound(a, s), r) == depth_bound(a, s * r));
}

TEST_CASE("sharpness scan is deterministic and internally consistent") {
    const auto records = sharpness_scan(2, 4, 1, 3, 5, 97);
    const auto rerun = sharpness_scan(2, 4, 1, 3, 5, 97);
    REQUIRE(records.size() == rerun.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].coeffs_hash == rerun[i].coeffs_hash);
        CHECK(records[i].bound == rerun[i].bound);
        CHECK(records[i].effective == rerun[i].effective);
        CHECK(records[i].block_sizes == rerun[i].block_sizes);
    }

    std::size_t single = 0, mixed = 0;
    for (const auto& rec : records) {
        CHECK(rec.effective <= rec.bound);
        CHECK(rec.sharp == (rec.effective == rec.bound));
        CHECK(*std::max_element(rec.block_sizes.begin(), rec.block_sizes.end()) == rec.n);
        (rec.block_sizes.size() == 1 ? single : mixed) += 1;
    }
    CHECK(single == 3 * 3 * 5);
    CHECK(mixed == 3 * 3 * 5);

    const auto summary = summarize_scan(records);
    std::size_t total = 0;
    for (const auto& row : summary) total += row.trials;
    CHECK(total == records.size());
}
