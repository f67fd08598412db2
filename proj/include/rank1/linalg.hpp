#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "rank1/rational.hpp"

namespace rank1 {

/** Dense row-major matrix of exact rationals. */
class RMatrix
{
    public:
        RMatrix() = default;
        RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
        RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

        static RMatrix identity(std::size_t n);

        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }

        Rational&       operator()(std::size_t i, std::size_t j)       { return data_[i * cols_ + j]; }
        const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

        std::span<Rational>       row(std::size_t i)       { return {data_.data() + i * cols_, cols_}; }
        std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

        RVector col(std::size_t j) const;

        RMatrix transpose() const;
        bool is_zero() const;

        friend RMatrix operator+(const RMatrix& a, const RMatrix& b);
        friend RMatrix operator-(const RMatrix& a);
        friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
        friend RVector operator*(const RMatrix& a, std::span<const Rational> v);
        friend bool operator==(const RMatrix& a, const RMatrix& b) = default;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/** Vector whose value at parameter xi is `constant + xi * slope`. */
struct AffineRVector
{
    RVector constant;
    RVector slope;

    AffineRVector() = default;
    explicit AffineRVector(std::size_t n) : constant(n), slope(n) {}
    AffineRVector(RVector c, RVector s);

    std::size_t size() const noexcept { return constant.size(); }
    RVector at(const Rational& xi) const;
    Rational at(std::size_t i, const Rational& xi) const { return constant[i] + xi * slope[i]; }
};

/** c2 * xi^2 + c1 * xi + c0. */
struct QuadraticR
{
    Rational c0;
    Rational c1;
    Rational c2;

    Rational operator()(const Rational& xi) const { return (c2 * xi + c1) * xi + c0; }
    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
};

/**
 * Solves M z(xi) = rhs_const + xi * rhs_slope for every xi.
 * Throws SingularMatrixError when M is singular.
 */
AffineRVector solve_square(const RMatrix& m, std::span<const Rational> rhs_const,
                           std::span<const Rational> rhs_slope);

/** Solves M z = rhs for a single right-hand side. */
RVector solve_square(const RMatrix& m, std::span<const Rational> rhs);

/** Exact inverse. Throws SingularMatrixError. */
RMatrix inverse(const RMatrix& m);

/** Rank by fraction-free (Bareiss) elimination. */
std::size_t matrix_rank(const RMatrix& m);

/**
 * Solves a possibly non-square system M z = rhs. Returns the solution when
 * it exists and is unique, nullopt otherwise (inconsistent or underdetermined).
 */
std::optional<RVector> solve_unique(const RMatrix& m, std::span<const Rational> rhs);

/**
 * All rational zeros of q in [lo, hi], ascending and without duplicates.
 *
 * With `nonpositive_hint` the caller asserts q <= 0 on [lo, hi], so any
 * interior zero is a double root and therefore rational. Throws
 * IdenticallyZeroError when q vanishes identically, and
 * IrrationalInteriorZeroError when an irrational zero lies strictly inside
 * (lo, hi); under the hint the latter means the hint was false.
 */
std::vector<Rational> quadratic_zeros_in_interval(const QuadraticR& q, const Rational& lo,
                                                  const Rational& hi, bool nonpositive_hint);

}   // namespace rank1
