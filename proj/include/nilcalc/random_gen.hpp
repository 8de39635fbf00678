/**
 * @file random_gen.hpp
 * @brief Deterministic random generators for scans and property tests.
 *
 * All draws go through raw mt19937_64 output so a seed pins the exact stream
 * on every platform (the standard distributions do not guarantee that).
 */
#ifndef NILCALC_RANDOM_GEN_HPP
#define NILCALC_RANDOM_GEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "nilcalc/matrix.hpp"
#include "nilcalc/series.hpp"

namespace nilcalc {

class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform in [0, k).
    std::size_t below(std::size_t k) { return static_cast<std::size_t>(gen_() % k); }

    /// Uniform integer in [lo, hi].
    long integer_in(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Small rational, numerator in [-4, 4], denominator in [1, 4].
    Rational rational() { return Rational(integer_in(-4, 4), integer_in(1, 4)); }

    Rational nonzero_rational() {
        for (;;) {
            Rational r = rational();
            if (!r.is_zero()) return r;
        }
    }

    /// Gaussian rational; roughly one draw in three has an imaginary part.
    GaussianRational gaussian() {
        if (below(3) == 0) return {rational(), rational()};
        return {rational(), Rational(0)};
    }

    GaussianRational nonzero_gaussian() {
        for (;;) {
            GaussianRational z = gaussian();
            if (!z.is_zero()) return z;
        }
    }

    /// Series with prescribed contact order: c_1..c_{r-1} = 0, c_r != 0,
    /// free constant term and free tail. r must satisfy 1 <= r <= cap.
    TruncSeries series_with_order(std::size_t cap, std::size_t r) {
        std::vector<GaussianRational> c(cap + 1);
        c[0] = gaussian();
        c[r] = nonzero_gaussian();
        for (std::size_t j = r + 1; j <= cap; ++j) c[j] = gaussian();
        return TruncSeries(cap, c);
    }

    TruncSeries series(std::size_t cap) {
        std::vector<GaussianRational> c(cap + 1);
        for (auto& x : c) x = gaussian();
        return TruncSeries(cap, c);
    }

    /// Strictly upper triangular matrix with small Gaussian-rational entries
    /// (roughly two thirds nonzero).
    ExactMatrix strictly_upper(std::size_t n) {
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (below(3) != 0) m.at(i, j) = gaussian();
        return m;
    }

    /// Conjugate by a random unimodular integer matrix built from a few
    /// elementary row operations; the inverse is replayed exactly, so
    /// P * P^{-1} = I holds by construction and the nilpotency index of the
    /// result equals that of N.
    ExactMatrix unimodular_conjugate(const ExactMatrix& N) {
        const std::size_t n = N.dim();
        if (n < 2) return N;
        struct ElementaryOp {
            std::size_t target, source;
            long factor;
        };
        std::vector<ElementaryOp> ops;
        const std::size_t count = 1 + below(3);
        for (std::size_t k = 0; k < count; ++k) {
            std::size_t i = below(n), j = below(n);
            if (i == j) j = (j + 1) % n;
            long f = integer_in(1, 2) * (below(2) ? 1 : -1);
            ops.push_back({i, j, f});
        }
        ExactMatrix p = ExactMatrix::identity(n);
        for (const auto& op : ops)
            for (std::size_t col = 0; col < n; ++col)
                p.at(op.target, col) += GaussianRational(op.factor) * p.at(op.source, col);
        ExactMatrix p_inv = ExactMatrix::identity(n);
        for (auto it = ops.rbegin(); it != ops.rend(); ++it)
            for (std::size_t col = 0; col < n; ++col)
                p_inv.at(it->target, col) -= GaussianRational(it->factor) * p_inv.at(it->source, col);
        return p * N * p_inv;
    }

    /// Random nilpotent matrix of dimension in [1, max_n], optionally hidden
    /// behind a unimodular similarity.
    ExactMatrix nilpotent(std::size_t max_n, bool conjugate = true) {
        const std::size_t n = 1 + below(max_n);
        ExactMatrix m = strictly_upper(n);
        if (conjugate && below(2)) m = unimodular_conjugate(m);
        return m;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace nilcalc

#endif
