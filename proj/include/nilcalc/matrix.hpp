/**
 * @file matrix.hpp
 * @brief Dense square matrices over Q(i) with exact arithmetic.
 *
 * Entries are Gaussian rationals, so every question asked here (is a power
 * zero? does the determinant match?) has an exact, decidable answer. Entry
 * growth is accepted; this is a desk-scale library, correctness first.
 */
#ifndef NILCALC_MATRIX_HPP
#define NILCALC_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilcalc/gaussian.hpp"

namespace nilcalc {

class ExactMatrix {
public:
    /// Zero matrix of dimension n >= 1.
    explicit ExactMatrix(std::size_t n) : n_(n), e_(n * n) {
        if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
        return m;
    }

    static ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
        ExactMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw std::invalid_argument("matrix rows must form a square array");
            for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t dim() const { return n_; }

    GaussianRational& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    GaussianRational trace() const {
        GaussianRational t;
        for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    ExactMatrix operator-() const {
        ExactMatrix m(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
        return m;
    }

    ExactMatrix operator+(const ExactMatrix& o) const {
        require_same_dim(o);
        ExactMatrix m(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
        return m;
    }

    ExactMatrix operator-(const ExactMatrix& o) const {
        require_same_dim(o);
        ExactMatrix m(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
        return m;
    }

    ExactMatrix operator*(const ExactMatrix& o) const {
        require_same_dim(o);
        ExactMatrix m(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const GaussianRational& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < n_; ++j) m.at(i, j) += a * o.at(k, j);
            }
        return m;
    }

    friend ExactMatrix operator*(const GaussianRational& a, const ExactMatrix& m) {
        ExactMatrix r(m.n_);
        for (std::size_t k = 0; k < m.e_.size(); ++k) r.e_[k] = a * m.e_[k];
        return r;
    }

    ExactMatrix pow(std::size_t k) const {
        ExactMatrix acc = identity(n_);
        ExactMatrix base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) acc = acc * base;
            if (k > 1) base = base * base;
        }
        return acc;
    }

    bool operator==(const ExactMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    /// Exact determinant by fraction-free (Bareiss) elimination with row
    /// pivoting. Used as an independent verification oracle.
    GaussianRational determinant() const {
        ExactMatrix a = *this;
        GaussianRational prev_pivot(1);
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n_; ++k) {
            if (a.at(k, k).is_zero()) {
                std::size_t p = k + 1;
                while (p < n_ && a.at(p, k).is_zero()) ++p;
                if (p == n_) return GaussianRational(0);
                for (std::size_t j = 0; j < n_; ++j) std::swap(a.at(k, j), a.at(p, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n_; ++i)
                for (std::size_t j = k + 1; j < n_; ++j)
                    a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev_pivot;
            prev_pivot = a.at(k, k);
        }
        const GaussianRational det = a.at(n_ - 1, n_ - 1);
        return sign < 0 ? -det : det;
    }

    /// Rows rendered as "[a  b  c]", one per line, columns aligned.
    std::string str() const {
        std::vector<std::string> cells(n_ * n_);
        std::vector<std::size_t> width(n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                cells[i * n_ + j] = at(i, j).str();
                width[j] = std::max(width[j], cells[i * n_ + j].size());
            }
        std::string out;
        for (std::size_t i = 0; i < n_; ++i) {
            out += "[";
            for (std::size_t j = 0; j < n_; ++j) {
                const std::string& c = cells[i * n_ + j];
                out += std::string(width[j] - c.size(), ' ') + c;
                if (j + 1 < n_) out += "  ";
            }
            out += "]";
            if (i + 1 < n_) out += "\n";
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) { return os << m.str(); }

private:
    void require_same_dim(const ExactMatrix& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(n_) +
                                        " vs " + std::to_string(o.n_));
    }

    std::size_t n_;
    std::vector<GaussianRational> e_;  // row-major
};

/// Jordan block: lambda on the diagonal, ones on the superdiagonal.
inline ExactMatrix jordan_block(std::size_t n, const GaussianRational& lambda = GaussianRational(0)) {
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = lambda;
        if (i + 1 < n) m.at(i, i + 1) = GaussianRational(1);
    }
    return m;
}

/// Block-diagonal direct sum.
inline ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix m(a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) m.at(a.dim() + i, a.dim() + j) = b.at(i, j);
    return m;
}

}  // namespace nilcalc

#endif
