#include "rank1/game.hpp"

#include <algorithm>

#include "rank1/errors.hpp"

namespace rank1 {

BimatrixGame::BimatrixGame(RMatrix a, RMatrix b) : a_(std::move(a)), b_(std::move(b))
{
    if (a_.rows() == 0 || a_.cols() == 0)
        throw PreconditionError("game must have at least one row and one column");
    if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
        throw PreconditionError("payoff matrices A and B differ in shape");
}

bool MixedStrategyPair::valid_for(const BimatrixGame& g) const
{
    auto ok = [](const RVector& v, std::size_t len) {
        if (v.size() != len)
            return false;
        Rational s = 0;
        for (const auto& e : v)
        {
            if (e < 0)
                return false;
            s += e;
        }
        return s == 1;
    };
    return ok(x, g.m()) && ok(y, g.n());
}

std::vector<EquilibriumPoint> canonical_set(std::vector<EquilibriumPoint> points)
{
    std::stable_sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
        return a.strategies < b.strategies;
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const auto& a, const auto& b) { return a.strategies == b.strategies; }),
                 points.end());
    return points;
}

bool same_strategy_set(const std::vector<EquilibriumPoint>& a, const std::vector<EquilibriumPoint>& b)
{
    const auto ca = canonical_set(a);
    const auto cb = canonical_set(b);
    return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end(),
                      [](const auto& p, const auto& q) { return p.strategies == q.strategies; });
}

namespace {

Rational max_of(const RVector& v)
{
    return *std::max_element(v.begin(), v.end());
}

RVector row_times(const RVector& x, const RMatrix& m)
{
    RVector out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            out[j] += x[i] * m(i, j);
    return out;
}

}   // namespace

NashCheck is_nash(const BimatrixGame& g, const MixedStrategyPair& s)
{
    const RVector ay = g.A() * s.y;
    const RVector xb = row_times(s.x, g.B());
    NashCheck out;
    out.payoff1 = max_of(ay);
    out.payoff2 = max_of(xb);
    out.is_nash = dot(s.x, ay) == out.payoff1 && dot(xb, s.y) == out.payoff2;
    return out;
}

Rational loss(const BimatrixGame& g, const MixedStrategyPair& s)
{
    const RVector ay = g.A() * s.y;
    const RVector xb = row_times(s.x, g.B());
    return max_of(ay) + max_of(xb) - dot(s.x, ay) - dot(xb, s.y);
}

EquilibriumPoint make_point(const BimatrixGame& g, MixedStrategyPair s, std::optional<Rational> source_xi)
{
    const NashCheck check = is_nash(g, s);
    return EquilibriumPoint{std::move(s), check.payoff1, check.payoff2, std::move(source_xi)};
}

std::size_t game_rank(const BimatrixGame& g)
{
    return matrix_rank(g.sum());
}

RankOneFactorization RankOneFactorization::checked(const BimatrixGame& g, RVector b, RVector c)
{
    if (b.size() != g.m() || c.size() != g.n())
        throw FactorizationMismatchError("factorization has wrong dimensions");
    const RMatrix sum = g.sum();
    for (std::size_t i = 0; i < g.m(); ++i)
        for (std::size_t j = 0; j < g.n(); ++j)
        {
            if (b[i] * c[j] != sum(i, j))
                throw FactorizationMismatchError();
        }
    return RankOneFactorization{std::move(b), std::move(c)};
}

RankOneFactorization RankOneFactorization::rescaled(const Rational& t) const
{
    if (t == 0)
        throw std::invalid_argument("rescaling factor must be nonzero");
    RankOneFactorization out{b, c};
    for (auto& e : out.b)
        e /= t;
    for (auto& e : out.c)
        e *= t;
    return out;
}

RankOneFactorization factor_rank1(const BimatrixGame& g)
{
    const RMatrix sum = g.sum();
    if (matrix_rank(sum) != 1)
        throw NotRankOneError();

    std::size_t r = 0;
    while (std::all_of(sum.row(r).begin(), sum.row(r).end(), [](const Rational& e) { return e == 0; }))
        ++r;
    RVector c(sum.row(r).begin(), sum.row(r).end());
    const std::size_t j0 = static_cast<std::size_t>(
        std::find_if(c.begin(), c.end(), [](const Rational& e) { return e != 0; }) - c.begin());

    RVector b(g.m());
    for (std::size_t i = 0; i < g.m(); ++i)
        b[i] = sum(i, j0) / c[j0];
    return RankOneFactorization{std::move(b), std::move(c)};
}

RankReductionStep rank_reduction_step(const BimatrixGame& g)
{
    const std::size_t d = g.m();
    if (g.n() != d || d < 2)
        throw NotFullRankError("rank reduction needs a square game with d >= 2");
    const RMatrix sum = g.sum();
    if (matrix_rank(sum) != d)
        throw NotFullRankError();

    // det(C + lambda * 1 e_j^T) = det(C) * (1 + lambda * w_j) with w = C^{-1} 1,
    // so column j admits the unique shift lambda = -1 / w_j iff w_j != 0.
    const RVector ones(d, Rational(1));
    const RVector w = solve_square(sum, ones);
    for (std::size_t j = 0; j < d; ++j)
    {
        if (w[j] != 0)
            return RankReductionStep{j, -1 / w[j]};
    }
    throw NotFullRankError("no column admits a rank-reducing shift");
}

BimatrixGame reduce_rank(const BimatrixGame& g)
{
    const RankReductionStep step = rank_reduction_step(g);
    return transform(g, AddToColumnOfA{step.column, step.lambda});
}

SpecialClass classify_special(const BimatrixGame& g)
{
    const RMatrix sum = g.sum();
    if (sum.is_zero())
        return ZeroSum{};
    RVector u(g.m());
    for (std::size_t i = 0; i < g.m(); ++i)
    {
        u[i] = sum(i, 0);
        for (std::size_t j = 1; j < g.n(); ++j)
        {
            if (sum(i, j) != u[i])
                return General{};
        }
    }
    return RowConstant{std::move(u)};
}

BimatrixGame reduce_row_constant(const BimatrixGame& g, const RVector& u)
{
    if (u.size() != g.m())
        throw NotRowConstantError("row constant vector has wrong length");
    const RMatrix sum = g.sum();
    RMatrix b = g.B();
    for (std::size_t i = 0; i < g.m(); ++i)
        for (std::size_t j = 0; j < g.n(); ++j)
        {
            if (sum(i, j) != u[i])
                throw NotRowConstantError();
            b(i, j) -= u[i];
        }
    return BimatrixGame(g.A(), std::move(b));
}

namespace {

struct TransformVisitor
{
    const BimatrixGame& g;

    void check_col(std::size_t j) const
    {
        if (j >= g.n())
            throw std::out_of_range("column index out of range");
    }
    void check_row(std::size_t i) const
    {
        if (i >= g.m())
            throw std::out_of_range("row index out of range");
    }

    BimatrixGame operator()(const AddToColumnOfA& op) const
    {
        check_col(op.j);
        RMatrix a = g.A();
        for (std::size_t i = 0; i < g.m(); ++i)
            a(i, op.j) += op.lambda;
        return BimatrixGame(std::move(a), g.B());
    }
    BimatrixGame operator()(const AddToRowOfB& op) const
    {
        check_row(op.i);
        RMatrix b = g.B();
        for (std::size_t j = 0; j < g.n(); ++j)
            b(op.i, j) += op.lambda;
        return BimatrixGame(g.A(), std::move(b));
    }
    BimatrixGame operator()(const ScaleColumnOfA& op) const
    {
        check_col(op.j);
        if (op.s <= 0)
            throw NonPositiveScaleError();
        RMatrix a = g.A();
        for (std::size_t i = 0; i < g.m(); ++i)
            a(i, op.j) *= op.s;
        return BimatrixGame(std::move(a), g.B());
    }
    BimatrixGame operator()(const ScaleRowOfB& op) const
    {
        check_row(op.i);
        if (op.s <= 0)
            throw NonPositiveScaleError();
        RMatrix b = g.B();
        for (std::size_t j = 0; j < g.n(); ++j)
            b(op.i, j) *= op.s;
        return BimatrixGame(g.A(), std::move(b));
    }
};

}   // namespace

BimatrixGame transform(const BimatrixGame& g, const GameTransform& op)
{
    return std::visit(TransformVisitor{g}, op);
}

BimatrixGame generate_kt(std::size_t d)
{
    if (d == 0)
        throw PreconditionError("generate_kt needs d >= 1");
    RMatrix a(d, d);
    RMatrix b(d, d);
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = 1; j <= d; ++j)
        {
            const long ii = static_cast<long>(i);
            const long jj = static_cast<long>(j);
            a(i - 1, j - 1) = 2 * ii * jj - ii * ii + jj * jj;
            b(i - 1, j - 1) = 2 * ii * jj + ii * ii - jj * jj;
        }
    return BimatrixGame(std::move(a), std::move(b));
}

}   // namespace rank1
