#include "rank1/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "rank1/errors.hpp"

namespace rank1 {

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows)
    {
        if (r.size() != cols_)
            throw std::invalid_argument("RMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RMatrix RMatrix::identity(std::size_t n)
{
    RMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i)
        id(i, i) = 1;
    return id;
}

RVector RMatrix::col(std::size_t j) const
{
    RVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i] = (*this)(i, j);
    return out;
}

RMatrix RMatrix::transpose() const
{
    RMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool RMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r == 0; });
}

RMatrix operator+(const RMatrix& a, const RMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("RMatrix: dimension mismatch in +");
    RMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
        out.data_[k] = a.data_[k] + b.data_[k];
    return out;
}

RMatrix operator-(const RMatrix& a)
{
    RMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
        out.data_[k] = -a.data_[k];
    return out;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("RMatrix: dimension mismatch in *");
    RMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
        {
            const Rational& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

RVector operator*(const RMatrix& a, std::span<const Rational> v)
{
    if (a.cols_ != v.size())
        throw std::invalid_argument("RMatrix: dimension mismatch in matrix-vector product");
    RVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        out[i] = dot(a.row(i), v);
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    assert(a.size() == b.size());
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    }
    return s;
}

AffineRVector::AffineRVector(RVector c, RVector s) : constant(std::move(c)), slope(std::move(s))
{
    if (constant.size() != slope.size())
        throw std::invalid_argument("AffineRVector: constant and slope differ in length");
}

RVector AffineRVector::at(const Rational& xi) const
{
    RVector out(constant.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = constant[i] + xi * slope[i];
    return out;
}

namespace {

/**
 * Gauss-Jordan elimination of the square matrix `m` applied to the columns
 * of `rhs` (m.rows() x k). On return `rhs` holds M^{-1} rhs.
 */
void gauss_jordan(RMatrix m, RMatrix& rhs)
{
    const std::size_t n = m.rows();
    if (m.cols() != n || rhs.rows() != n)
        throw std::invalid_argument("gauss_jordan: dimension mismatch");
    const std::size_t k = rhs.cols();

    for (std::size_t col = 0; col < n; ++col)
    {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw SingularMatrixError();
        if (pivot != col)
        {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(pivot, j), m(col, j));
            for (std::size_t j = 0; j < k; ++j)
                std::swap(rhs(pivot, j), rhs(col, j));
        }
        const Rational inv = 1 / m(col, col);
        for (std::size_t j = col; j < n; ++j)
            m(col, j) *= inv;
        for (std::size_t j = 0; j < k; ++j)
            rhs(col, j) *= inv;
        for (std::size_t i = 0; i < n; ++i)
        {
            if (i == col || m(i, col) == 0)
                continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < n; ++j)
                m(i, j) -= f * m(col, j);
            for (std::size_t j = 0; j < k; ++j)
                rhs(i, j) -= f * rhs(col, j);
        }
    }
}

}   // namespace

AffineRVector solve_square(const RMatrix& m, std::span<const Rational> rhs_const,
                           std::span<const Rational> rhs_slope)
{
    const std::size_t n = m.rows();
    if (rhs_const.size() != n || rhs_slope.size() != n)
        throw std::invalid_argument("solve_square: right-hand side length mismatch");
    RMatrix rhs(n, 2);
    for (std::size_t i = 0; i < n; ++i)
    {
        rhs(i, 0) = rhs_const[i];
        rhs(i, 1) = rhs_slope[i];
    }
    gauss_jordan(m, rhs);
    return AffineRVector(rhs.col(0), rhs.col(1));
}

RVector solve_square(const RMatrix& m, std::span<const Rational> rhs)
{
    const std::size_t n = m.rows();
    if (rhs.size() != n)
        throw std::invalid_argument("solve_square: right-hand side length mismatch");
    RMatrix b(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        b(i, 0) = rhs[i];
    gauss_jordan(m, b);
    return b.col(0);
}

RMatrix inverse(const RMatrix& m)
{
    RMatrix id = RMatrix::identity(m.rows());
    gauss_jordan(m, id);
    return id;
}

std::size_t matrix_rank(const RMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    // Clear denominators row by row; rank is invariant under row scaling.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i)
    {
        Integer l = 1;
        for (std::size_t j = 0; j < cols; ++j)
            l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(m(i, j))));
        for (std::size_t j = 0; j < cols; ++j)
        {
            const Rational scaled = m(i, j) * Rational(l);
            a[i][j] = boost::multiprecision::numerator(scaled);
        }
    }

    // Bareiss: every division below is exact.
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col)
    {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i)
        {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::optional<RVector> solve_unique(const RMatrix& m, std::span<const Rational> rhs)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rhs.size() != rows)
        throw std::invalid_argument("solve_unique: right-hand side length mismatch");

    RMatrix a(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i)
    {
        for (std::size_t j = 0; j < cols; ++j)
            a(i, j) = m(i, j);
        a(i, cols) = rhs[i];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col)
    {
        std::size_t p = r;
        while (p < rows && a(p, col) == 0)
            ++p;
        if (p == rows)
            continue;
        for (std::size_t j = 0; j <= cols; ++j)
            std::swap(a(p, j), a(r, j));
        const Rational inv = 1 / a(r, col);
        for (std::size_t j = col; j <= cols; ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i)
        {
            if (i == r || a(i, col) == 0)
                continue;
            const Rational f = a(i, col);
            for (std::size_t j = col; j <= cols; ++j)
                a(i, j) -= f * a(r, j);
        }
        pivot_cols.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
    {
        if (a(i, cols) != 0)
            return std::nullopt;
    }
    if (r < cols)
        return std::nullopt;
    RVector z(cols);
    for (std::size_t i = 0; i < r; ++i)
        z[pivot_cols[i]] = a(i, cols);
    return z;
}

namespace {

/** Sign of p + s * sqrt(d) for d > 0 not a perfect square and s = +1 or -1. */
int sign_plus_sqrt(const Rational& p, int s, const Rational& d)
{
    if (s > 0)
        return (p >= 0 || d > p * p) ? 1 : -1;
    return (p > 0 && p * p > d) ? 1 : -1;
}

}   // namespace

std::vector<Rational> quadratic_zeros_in_interval(const QuadraticR& q, const Rational& lo,
                                                  const Rational& hi, bool /*nonpositive_hint*/)
{
    // The hint only documents why the result is complete; an irrational
    // interior zero is reported either way.
    if (lo > hi)
        throw std::invalid_argument("quadratic_zeros_in_interval: lo > hi");
    if (q.is_zero())
        throw IdenticallyZeroError();

    std::vector<Rational> zeros;
    if (q(lo) == 0)
        zeros.push_back(lo);
    if (hi != lo && q(hi) == 0)
        zeros.push_back(hi);

    auto add_interior = [&](const Rational& r) {
        if (lo < r && r < hi)
            zeros.push_back(r);
    };

    if (q.c2 == 0)
    {
        if (q.c1 != 0)
            add_interior(-q.c0 / q.c1);
    }
    else
    {
        const Rational disc = q.c1 * q.c1 - 4 * q.c2 * q.c0;
        if (disc == 0)
        {
            add_interior(-q.c1 / (2 * q.c2));
        }
        else if (disc > 0)
        {
            Rational root;
            if (exact_sqrt(disc, root))
            {
                add_interior((-q.c1 - root) / (2 * q.c2));
                add_interior((-q.c1 + root) / (2 * q.c2));
            }
            else
            {
                // Root (-c1 + s*sqrt(disc)) / (2 c2); test lo < root < hi exactly.
                const int denom_sign = q.c2 > 0 ? 1 : -1;
                for (int s : {-1, 1})
                {
                    const int above_lo = denom_sign * sign_plus_sqrt(-q.c1 - 2 * q.c2 * lo, s, disc);
                    const int below_hi = -denom_sign * sign_plus_sqrt(-q.c1 - 2 * q.c2 * hi, s, disc);
                    if (above_lo > 0 && below_hi > 0)
                        throw IrrationalInteriorZeroError();
                }
            }
        }
    }

    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
    return zeros;
}

}   // namespace rank1
