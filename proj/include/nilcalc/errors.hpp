/**
 * @file errors.hpp
 * @brief Exception types shared across the library.
 */
#ifndef NILCALC_ERRORS_HPP
#define NILCALC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilcalc {

/// A lower hypergeometric parameter b makes the rising factorial (b)_j vanish,
/// so the series coefficient at degree j is undefined.
class ZeroLowerPochhammer : public std::domain_error {
public:
    ZeroLowerPochhammer(std::size_t param_index, std::size_t degree)
        : std::domain_error("lower parameter #" + std::to_string(param_index) +
                            " has vanishing rising factorial at j = " + std::to_string(degree)),
          param_index(param_index),
          degree(degree) {}

    std::size_t param_index;
    std::size_t degree;
};

/// Two truncated series with different caps were combined. Caps never truncate
/// silently; the caller must extend or truncate explicitly.
class CapMismatch : public std::invalid_argument {
public:
    CapMismatch(std::size_t lhs, std::size_t rhs)
        : std::invalid_argument("series cap mismatch: " + std::to_string(lhs) +
                                " vs " + std::to_string(rhs)) {}
};

/// Inversion requested for an element with zero constant term (a nilpotent
/// element of the truncated ring, hence not a unit).
class NotInvertible : public std::domain_error {
public:
    NotInvertible() : std::domain_error("constant term is zero: element is nilpotent, not a unit") {}
    explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

/// Composition F(G(x)) requires the inner series to have zero constant term.
class NonzeroConstantInner : public std::invalid_argument {
public:
    NonzeroConstantInner()
        : std::invalid_argument("inner series of a composition must have zero constant term") {}
};

/// The matrix is not nilpotent: its n-th power is nonzero.
class NotNilpotent : public std::domain_error {
public:
    explicit NotNilpotent(std::size_t dimension)
        : std::domain_error("matrix is not nilpotent: power " + std::to_string(dimension) +
                            " is nonzero"),
          dimension(dimension) {}

    std::size_t dimension;
};

/// A series was evaluated at a matrix whose nilpotency index exceeds cap + 1,
/// so surviving terms would be missing.
class CapTooSmall : public std::invalid_argument {
public:
    CapTooSmall(std::size_t cap, std::size_t index)
        : std::invalid_argument("series cap " + std::to_string(cap) +
                                " is too small for nilpotency index " + std::to_string(index)) {}
};

/// The matrix does not decompose as lambda*I + (nilpotent): it has more than
/// one distinct eigenvalue.
class NotExceptionalPoint : public std::domain_error {
public:
    explicit NotExceptionalPoint(const std::string& what) : std::domain_error(what) {}
};

}  // namespace nilcalc

#endif
