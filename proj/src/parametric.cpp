#include "rank1/parametric.hpp"

#include <algorithm>
#include <set>

#include "rank1/errors.hpp"

namespace rank1 {

ParametricTableau build_tableau(const BimatrixGame& g, const RankOneFactorization& f)
{
    ParametricTableau t;
    t.m = g.m();
    t.n = g.n();
    t.factorization = RankOneFactorization::checked(g, f.b, f.c);

    const std::size_t m = t.m;
    const std::size_t n = t.n;
    t.m1 = RMatrix(t.K(), t.N());
    for (std::size_t i = 0; i < m; ++i)
        t.m1(i, t.x_offset() + i) = -1;
    for (std::size_t j = 0; j < n; ++j)
    {
        for (std::size_t i = 0; i < m; ++i)
            t.m1(m + j, t.x_offset() + i) = g.B()(i, j);
        t.m1(m + j, t.pi2_index()) = -1;
    }
    for (std::size_t i = 0; i < m; ++i)
    {
        for (std::size_t j = 0; j < n; ++j)
            t.m1(m + n + i, t.y_offset() + j) = g.A()(i, j);
        t.m1(m + n + i, t.pi1_index()) = -1;
    }
    for (std::size_t j = 0; j < n; ++j)
        t.m1(2 * m + n + j, t.y_offset() + j) = -1;

    t.m2 = RMatrix(3, t.N());
    for (std::size_t i = 0; i < m; ++i)
        t.m2(0, t.x_offset() + i) = 1;
    for (std::size_t j = 0; j < n; ++j)
    {
        t.m2(1, t.y_offset() + j) = 1;
        t.m2(2, t.y_offset() + j) = t.factorization.c[j];
    }
    t.e2_const = {1, 1, 0};
    t.e2_slope = {0, 0, 1};

    t.dual_rhs_const = RVector(t.N());
    t.dual_rhs_const[t.pi1_index()] = -1;
    t.dual_rhs_const[t.pi2_index()] = -1;
    t.dual_rhs_slope = RVector(t.N());
    for (std::size_t i = 0; i < m; ++i)
        t.dual_rhs_slope[t.x_offset() + i] = t.factorization.b[i];
    return t;
}

std::pair<Rational, Rational> xi_range(const RankOneFactorization& f)
{
    const auto [lo, hi] = std::minmax_element(f.c.begin(), f.c.end());
    return {*lo, *hi};
}

LabelSet ParametricBasis::I(const ParametricTableau& t) const
{
    LabelSet out;
    for (int r : rows)
    {
        if (r <= static_cast<int>(t.m + t.n))
            out.push_back(r);
    }
    return out;
}

LabelSet ParametricBasis::J(const ParametricTableau& t) const
{
    LabelSet out;
    const int offset = static_cast<int>(t.m + t.n);
    for (int r : rows)
    {
        if (r > offset)
            out.push_back(r - offset);
    }
    return out;
}

RMatrix dual_constraint_matrix(const ParametricTableau& t)
{
    RMatrix d(t.N(), t.K() + 3);
    for (std::size_t k = 0; k < t.K(); ++k)
        for (std::size_t v = 0; v < t.N(); ++v)
            d(v, k) = t.m1(k, v);
    for (std::size_t e = 0; e < 3; ++e)
        for (std::size_t v = 0; v < t.N(); ++v)
            d(v, t.K() + e) = t.m2(e, v);
    return d;
}

StandardForm standard_form(const ParametricTableau& t, const Rational& xi, bool with_xi_row)
{
    const std::size_t m = t.m;
    const std::size_t n = t.n;
    const std::size_t K = t.K();
    const std::size_t pi1 = K;
    const std::size_t pi2 = K + 1;
    const std::size_t vars = K + 2;

    // Lower bounds strictly below every attainable payoff keep pi1', pi2' > 0.
    Rational min_a = t.m1(m + n, t.y_offset());
    Rational min_b = t.m1(m, t.x_offset());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            min_a = std::min(min_a, t.m1(m + n + i, t.y_offset() + j));
            min_b = std::min(min_b, t.m1(m + j, t.x_offset() + i));
        }

    StandardForm sf;
    sf.pi1_shift = min_a - 1;
    sf.pi2_shift = min_b - 1;

    const std::size_t rows = n + m + (with_xi_row ? 3 : 2);
    StandardLp& lp = sf.lp;
    lp.a = RMatrix(rows, vars);
    lp.b = RVector(rows);
    lp.c = RVector(vars);

    // w_k for k < m is x_k; w_{2m+n+j} is y_j.
    const std::size_t y_var = 2 * m + n;
    std::size_t r = 0;
    for (std::size_t j = 0; j < n; ++j, ++r)
    {
        for (std::size_t i = 0; i < m; ++i)
            lp.a(r, i) = t.m1(m + j, t.x_offset() + i);
        lp.a(r, m + j) = 1;
        lp.a(r, pi2) = -1;
        lp.b[r] = sf.pi2_shift;
    }
    for (std::size_t i = 0; i < m; ++i, ++r)
    {
        for (std::size_t j = 0; j < n; ++j)
            lp.a(r, y_var + j) = t.m1(m + n + i, t.y_offset() + j);
        lp.a(r, m + n + i) = 1;
        lp.a(r, pi1) = -1;
        lp.b[r] = sf.pi1_shift;
    }
    for (std::size_t i = 0; i < m; ++i)
        lp.a(r, i) = 1;
    lp.b[r++] = 1;
    for (std::size_t j = 0; j < n; ++j)
        lp.a(r, y_var + j) = 1;
    lp.b[r++] = 1;
    if (with_xi_row)
    {
        for (std::size_t j = 0; j < n; ++j)
            lp.a(r, y_var + j) = t.factorization.c[j];
        lp.b[r++] = xi;
    }

    for (std::size_t i = 0; i < m; ++i)
        lp.c[i] = xi * t.factorization.b[i];
    lp.c[pi1] = -1;
    lp.c[pi2] = -1;
    return sf;
}

namespace {

/** Sign of a + s * xi for xi just above xi0, where value = a + s * xi0. */
int right_sign(const Rational& value, const Rational& slope)
{
    if (value != 0)
        return value.sign();
    return slope.sign();
}

/** Lexicographic comparison of two equally long keys. */
bool lex_less(const RVector& a, const RVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/**
 * Basis rows together with the inverse of the basis matrix
 * ((M1)_B ; M2), the primal z(xi) and the dual multipliers w(xi) over the
 * basis positions (inequality rows first, then the three equalities).
 */
class BasisState
{
    public:
        BasisState(const ParametricTableau& t, std::vector<int> rows) : t_(t), rows_(std::move(rows))
        {
            const std::size_t N = t.N();
            if (rows_.size() + t.m2.rows() != N)
                throw SingularBasisError("basis has " + std::to_string(rows_.size()) + " rows, expected " +
                                         std::to_string(N - t.m2.rows()));
            RMatrix bm(N, N);
            for (std::size_t p = 0; p < rows_.size(); ++p)
                for (std::size_t v = 0; v < N; ++v)
                    bm(p, v) = t.m1(static_cast<std::size_t>(rows_[p] - 1), v);
            for (std::size_t e = 0; e < t.m2.rows(); ++e)
                for (std::size_t v = 0; v < N; ++v)
                    bm(rows_.size() + e, v) = t.m2(e, v);
            try
            {
                inv_ = inverse(bm);
            }
            catch (const SingularMatrixError&)
            {
                throw SingularBasisError();
            }

            RVector rc(N), rs(N);
            for (std::size_t e = 0; e < t.m2.rows(); ++e)
            {
                rc[rows_.size() + e] = t.e2_const[e];
                rs[rows_.size() + e] = t.e2_slope[e];
            }
            z_ = AffineRVector(inv_ * rc, inv_ * rs);
            const RMatrix inv_t = inv_.transpose();
            w_ = AffineRVector(inv_t * t.dual_rhs_const, inv_t * t.dual_rhs_slope);
        }

        const std::vector<int>& rows() const { return rows_; }
        const AffineRVector& z() const { return z_; }
        const AffineRVector& w() const { return w_; }

        bool in_basis(int row) const { return std::binary_search(rows_.begin(), rows_.end(), row); }

        /** Slack -M1_row z(xi) as (value at xi0, slope). */
        std::pair<Rational, Rational> slack(int row, const Rational& xi0) const
        {
            const auto r = t_.m1.row(static_cast<std::size_t>(row - 1));
            const Rational c = -dot(r, z_.constant);
            const Rational s = -dot(r, z_.slope);
            return {c + xi0 * s, s};
        }

        /** M1_row times column `pos` of the basis inverse. */
        Rational row_times_inverse(int row, std::size_t pos) const
        {
            const auto r = t_.m1.row(static_cast<std::size_t>(row - 1));
            Rational s = 0;
            for (std::size_t v = 0; v < r.size(); ++v)
            {
                if (r[v] != 0)
                    s += r[v] * inv_(v, pos);
            }
            return s;
        }

        std::vector<int> swapped(int leaving, int entering) const
        {
            std::vector<int> next;
            for (int r : rows_)
            {
                if (r != leaving)
                    next.push_back(r);
            }
            next.push_back(entering);
            std::sort(next.begin(), next.end());
            return next;
        }

    private:
        const ParametricTableau& t_;
        std::vector<int> rows_;
        RMatrix inv_;
        AffineRVector z_;
        AffineRVector w_;
};

/** A violated nonbasic row enters; the leaving row comes from the dual ratio test. */
Pivot dual_pivot(const ParametricTableau& t, const BasisState& s, int entering, const Rational& xi0)
{
    std::optional<std::size_t> best;
    RVector best_key;
    for (std::size_t p = 0; p < s.rows().size(); ++p)
    {
        const Rational alpha = s.row_times_inverse(entering, p);
        if (alpha <= 0)
            continue;
        const Rational value = s.w().constant[p] + xi0 * s.w().slope[p];
        RVector key{value / alpha, s.w().slope[p] / alpha};
        if (!best || lex_less(key, best_key))
        {
            best = p;
            best_key = std::move(key);
        }
    }
    (void)t;
    if (!best)
        throw StalledError("dual ratio test found no leaving row for entering row " + std::to_string(entering));
    return Pivot{s.rows()[*best], entering, true};
}

/**
 * A basic row with negative multiplier leaves; the entering row comes from
 * the primal ratio test along the released edge, with slacks perturbed
 * lexicographically (row k relaxed by delta^k).
 */
Pivot primal_pivot(const ParametricTableau& t, const BasisState& s, std::size_t leaving_pos, const Rational& xi0)
{
    const int K = static_cast<int>(t.K());
    const std::size_t nb = s.rows().size();

    std::optional<int> best;
    RVector best_key;
    for (int j = 1; j <= K; ++j)
    {
        if (s.in_basis(j))
            continue;
        // Moving along d = -Binv e_leaving changes M1_j z at rate -(M1_j Binv)_leaving.
        const Rational rate = -s.row_times_inverse(j, leaving_pos);
        if (rate <= 0)
            continue;
        const auto [value, slope] = s.slack(j, xi0);
        RVector key;
        key.reserve(2 + static_cast<std::size_t>(K));
        key.push_back(value / rate);
        key.push_back(slope / rate);
        for (int k = 1; k <= K; ++k)
        {
            Rational coef = (k == j) ? Rational(1) : Rational(0);
            if (s.in_basis(k))
            {
                const auto pos = static_cast<std::size_t>(
                    std::lower_bound(s.rows().begin(), s.rows().end(), k) - s.rows().begin());
                coef -= s.row_times_inverse(j, pos);
            }
            key.push_back(coef / rate);
        }
        if (!best || lex_less(key, best_key))
        {
            best = j;
            best_key = std::move(key);
        }
    }
    (void)nb;
    if (!best)
        throw StalledError("primal ratio test found no entering row");
    return Pivot{s.rows()[leaving_pos], *best, false};
}

/**
 * Pivots from `rows` until the basis is primal and dual feasible for xi
 * just above xi0. Returns the pivots performed and the final rows.
 */
std::pair<std::vector<int>, std::vector<Pivot>> reoptimize_right(const ParametricTableau& t, std::vector<int> rows,
                                                                 const Rational& xi0)
{
    std::vector<Pivot> pivots;
    std::set<std::vector<int>> seen;
    const int K = static_cast<int>(t.K());

    while (true)
    {
        if (!seen.insert(rows).second)
            throw StalledError("basis cycle at xi = " + to_string(xi0));
        const BasisState s(t, rows);

        std::optional<int> violated;
        for (int j = 1; j <= K && !violated; ++j)
        {
            if (s.in_basis(j))
                continue;
            const auto [value, slope] = s.slack(j, xi0);
            if (right_sign(value, slope) < 0)
                violated = j;
        }
        if (violated)
        {
            const Pivot p = dual_pivot(t, s, *violated, xi0);
            pivots.push_back(p);
            rows = s.swapped(p.leaving, p.entering);
            continue;
        }

        std::optional<std::size_t> negative;
        for (std::size_t p = 0; p < s.rows().size() && !negative; ++p)
        {
            const Rational value = s.w().constant[p] + xi0 * s.w().slope[p];
            if (right_sign(value, s.w().slope[p]) < 0)
                negative = p;
        }
        if (negative)
        {
            const Pivot p = primal_pivot(t, s, *negative, xi0);
            pivots.push_back(p);
            rows = s.swapped(p.leaving, p.entering);
            continue;
        }
        return {rows, pivots};
    }
}

}   // namespace

ParametricBasis initial_basis(const ParametricTableau& t, const Rational& xi)
{
    const auto [lo, hi] = xi_range(t.factorization);
    if (xi < lo || xi > hi)
        throw std::out_of_range("initial_basis: xi outside [xi_min, xi_max]");

    const StandardForm sf = standard_form(t, xi, true);
    const LpSolution sol = solve_standard_lp(sf.lp);
    if (!sol.dropped_rows.empty())
        throw SingularBasisError("redundant equality rows in LP(xi)");

    std::vector<int> rows;
    for (std::size_t k = 0; k < t.K(); ++k)
    {
        if (!sol.is_basic(k))
            rows.push_back(static_cast<int>(k + 1));
    }
    if (xi < hi)
        rows = reoptimize_right(t, std::move(rows), xi).first;
    return ParametricBasis{std::move(rows)};
}

BasisSolution solve_basis(const ParametricTableau& t, const ParametricBasis& basis)
{
    const BasisState s(t, basis.rows);
    AffineRVector u(t.K() + 3);
    const std::size_t nb = basis.rows.size();
    for (std::size_t p = 0; p < nb; ++p)
    {
        const auto k = static_cast<std::size_t>(basis.rows[p] - 1);
        u.constant[k] = s.w().constant[p];
        u.slope[k] = s.w().slope[p];
    }
    for (std::size_t e = 0; e < t.m2.rows(); ++e)
    {
        u.constant[t.K() + e] = s.w().constant[nb + e];
        u.slope[t.K() + e] = s.w().slope[nb + e];
    }
    return BasisSolution{s.z(), std::move(u)};
}

namespace {

struct Bounds
{
    std::optional<Rational> lo;
    std::optional<Rational> hi;
};

/** Restricts to {xi : c + s xi >= 0}. Returns false when no xi qualifies. */
bool restrict_bounds(Bounds& b, const Rational& c, const Rational& s)
{
    if (s == 0)
        return c >= 0;
    const Rational root = -c / s;
    if (s > 0)
    {
        if (!b.lo || root > *b.lo)
            b.lo = root;
    }
    else if (!b.hi || root < *b.hi)
    {
        b.hi = root;
    }
    return true;
}

}   // namespace

LabelSet binding_rows(const ParametricTableau& t, const AffineRVector& z, const Rational& xi)
{
    const RVector point = z.at(xi);
    LabelSet out;
    for (std::size_t k = 0; k < t.K(); ++k)
    {
        if (dot(t.m1.row(k), point) == 0)
            out.push_back(static_cast<int>(k + 1));
    }
    return out;
}

BasisInterval basis_interval(const ParametricTableau& t, const ParametricBasis& basis, const BasisSolution& sol)
{
    Bounds alpha;
    Bounds beta;
    for (std::size_t k = 0; k < t.K(); ++k)
    {
        const int row = static_cast<int>(k + 1);
        const bool basic = std::binary_search(basis.rows.begin(), basis.rows.end(), row);
        if (basic)
        {
            if (!restrict_bounds(beta, sol.u.constant[k], sol.u.slope[k]))
                throw EmptyIntervalError();
        }
        else
        {
            const Rational c = -dot(t.m1.row(k), sol.z.constant);
            const Rational s = -dot(t.m1.row(k), sol.z.slope);
            if (!restrict_bounds(alpha, c, s))
                throw EmptyIntervalError();
        }
    }

    const auto [lo, hi] = xi_range(t.factorization);
    BasisInterval iv;
    iv.basis = basis;
    iv.z = sol.z;
    iv.u = sol.u;
    iv.alpha1 = alpha.lo;
    iv.alpha2 = alpha.hi;
    iv.beta1 = beta.lo;
    iv.beta2 = beta.hi;
    iv.xi1 = lo;
    iv.xi2 = hi;
    for (const auto& b : {alpha.lo, beta.lo})
    {
        if (b && *b > iv.xi1)
            iv.xi1 = *b;
    }
    for (const auto& b : {alpha.hi, beta.hi})
    {
        if (b && *b < iv.xi2)
            iv.xi2 = *b;
    }
    if (iv.xi1 > iv.xi2)
        throw EmptyIntervalError();

    // phi(xi) = xi * (x(xi)^T b) - pi1(xi) - pi2(xi)
    const auto& b = t.factorization.b;
    Rational xb_const = 0;
    Rational xb_slope = 0;
    for (std::size_t i = 0; i < t.m; ++i)
    {
        xb_const += sol.z.constant[t.x_offset() + i] * b[i];
        xb_slope += sol.z.slope[t.x_offset() + i] * b[i];
    }
    iv.objective.c2 = xb_slope;
    iv.objective.c1 = xb_const - sol.z.slope[t.pi1_index()] - sol.z.slope[t.pi2_index()];
    iv.objective.c0 = -sol.z.constant[t.pi1_index()] - sol.z.constant[t.pi2_index()];
    return iv;
}

std::string to_string(PivotCase c)
{
    switch (c)
    {
        case PivotCase::Feasibility: return "feasibility";
        case PivotCase::Optimality:  return "optimality";
        case PivotCase::Both:        return "both";
    }
    return "?";
}

Advance advance(const ParametricTableau& t, const BasisInterval& interval)
{
    const auto [lo, hi] = xi_range(t.factorization);
    if (interval.xi2 >= hi)
        throw std::invalid_argument("advance: interval already reaches xi_max");

    const bool at_alpha = interval.alpha2 && *interval.alpha2 == interval.xi2;
    const bool at_beta = interval.beta2 && *interval.beta2 == interval.xi2;
    if (!at_alpha && !at_beta)
        throw StalledError("interval ends before xi_max without a breakpoint");

    auto [rows, pivots] = reoptimize_right(t, interval.basis.rows, interval.xi2);
    if (pivots.empty())
        throw StalledError("no pivot at breakpoint xi = " + to_string(interval.xi2));
    Advance out;
    out.basis = ParametricBasis{std::move(rows)};
    out.kind = at_alpha && at_beta ? PivotCase::Both : (at_alpha ? PivotCase::Feasibility : PivotCase::Optimality);
    out.pivots = std::move(pivots);
    return out;
}

namespace {

EquilibriumPoint point_from_z(const ParametricTableau& t, const RVector& z, std::optional<Rational> xi)
{
    MixedStrategyPair s{RVector(z.begin() + static_cast<long>(t.x_offset()),
                                z.begin() + static_cast<long>(t.x_offset() + t.m)),
                        RVector(z.begin() + static_cast<long>(t.y_offset()),
                                z.begin() + static_cast<long>(t.y_offset() + t.n))};
    return EquilibriumPoint{std::move(s), z[t.pi1_index()], z[t.pi2_index()], std::move(xi)};
}

}   // namespace

std::vector<EquilibriumPoint> equilibria_on_interval(const BimatrixGame& g, const ParametricTableau& t,
                                                     const BasisInterval& interval)
{
    std::vector<Rational> zeros;
    try
    {
        zeros = quadratic_zeros_in_interval(interval.objective, interval.xi1, interval.xi2, true);
    }
    catch (const IdenticallyZeroError&)
    {
        throw DegenerateGameError("objective vanishes on [" + to_string(interval.xi1) + ", " +
                                  to_string(interval.xi2) + "]: continuum of equilibria");
    }

    std::vector<EquilibriumPoint> out;
    for (const auto& xi : zeros)
    {
        EquilibriumPoint p = point_from_z(t, interval.point(xi), xi);
        const NashCheck check = is_nash(g, p.strategies);
        if (!check.is_nash || check.payoff1 != p.payoff1 || check.payoff2 != p.payoff2)
            throw LpError("zero-objective point at xi = " + to_string(xi) + " is not an equilibrium");
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

void append_unique(std::vector<EquilibriumPoint>& out, std::vector<EquilibriumPoint> found)
{
    for (auto& p : found)
    {
        const bool dup = std::any_of(out.begin(), out.end(),
                                     [&](const auto& q) { return q.strategies == p.strategies; });
        if (!dup)
            out.push_back(std::move(p));
    }
}

LabelSet label_union(LabelSet a, const LabelSet& b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

/** The single LP of a zero-sum game (xi = 0, no c^T y row). */
EquilibriumPoint solve_zero_sum(const BimatrixGame& g)
{
    const RankOneFactorization zero{RVector(g.m()), RVector(g.n())};
    const ParametricTableau t = build_tableau(g, zero);
    const StandardForm sf = standard_form(t, Rational(0), false);
    const LpSolution sol = solve_standard_lp(sf.lp);

    const std::size_t m = g.m();
    const std::size_t n = g.n();
    MixedStrategyPair s{RVector(sol.v.begin(), sol.v.begin() + static_cast<long>(m)),
                        RVector(sol.v.begin() + static_cast<long>(2 * m + n),
                                sol.v.begin() + static_cast<long>(2 * m + 2 * n))};
    EquilibriumPoint p{std::move(s), sol.v[t.K()] + sf.pi1_shift, sol.v[t.K() + 1] + sf.pi2_shift, Rational(0)};
    const NashCheck check = is_nash(g, p.strategies);
    // Undo the payoff shifts: the unshifted objective is -pi1 - pi2.
    if (!check.is_nash || sol.objective - sf.pi1_shift - sf.pi2_shift != 0)
        throw LpError("zero-sum LP optimum is not an equilibrium");
    return p;
}

void build_table(SweepTrace& trace, const ParametricTableau& t)
{
    const auto& ivs = trace.intervals;
    for (std::size_t k = 0; k < ivs.size(); ++k)
    {
        const auto& iv = ivs[k];
        if (k == 0)
            trace.table.push_back(TraceRow{iv.xi1, iv.xi1, true, iv.objective(iv.xi1),
                                           binding_rows(t, iv.z, iv.xi1)});
        const Rational mid = (iv.xi1 + iv.xi2) / 2;
        trace.table.push_back(TraceRow{iv.xi1, iv.xi2, false, iv.objective(mid), iv.basis.rows});
        LabelSet binding = binding_rows(t, iv.z, iv.xi2);
        if (k + 1 < ivs.size())
            binding = label_union(std::move(binding), binding_rows(t, ivs[k + 1].z, iv.xi2));
        trace.table.push_back(TraceRow{iv.xi2, iv.xi2, true, iv.objective(iv.xi2), std::move(binding)});
    }
}

}   // namespace

SweepTrace enumerate_all(const BimatrixGame& g, const EnumerateOptions& options)
{
    if (options.check_degeneracy)
    {
        const DegeneracyReport report = check_nondegenerate(g, options.exec);
        if (!report.nondegenerate)
            throw DegenerateGameError("degenerate game", report.describe());
    }

    SweepTrace trace;
    const SpecialClass cls = classify_special(g);
    if (std::holds_alternative<ZeroSum>(cls))
    {
        trace.path = SweepPath::ZeroSum;
        trace.equilibria.push_back(solve_zero_sum(g));
        return trace;
    }
    if (const auto* rc = std::get_if<RowConstant>(&cls))
    {
        trace.path = SweepPath::RowConstant;
        const EquilibriumPoint p = solve_zero_sum(reduce_row_constant(g, rc->u));
        trace.equilibria.push_back(make_point(g, p.strategies, p.source_xi));
        return trace;
    }

    const RankOneFactorization f = options.factorization ? *options.factorization : factor_rank1(g);
    const ParametricTableau t = build_tableau(g, f);
    const auto [lo, hi] = xi_range(t.factorization);
    if (lo == hi)
        throw NotRowConstantError("factorization has constant c but the game is not row-constant");

    std::set<std::vector<int>> visited;
    ParametricBasis basis = initial_basis(t, lo);
    Rational xi_prev = lo;
    while (true)
    {
        if (!visited.insert(basis.rows).second)
            throw StalledError("basis revisited during sweep");

        BasisInterval iv = basis_interval(t, basis, solve_basis(t, basis));
        if (iv.xi1 > xi_prev || iv.xi2 <= xi_prev)
            throw StalledError("basis is not optimal just above xi = " + to_string(xi_prev));
        iv.xi1 = xi_prev;

        append_unique(trace.equilibria, equilibria_on_interval(g, t, iv));
        trace.intervals.push_back(iv);
        if (iv.xi2 >= hi)
            break;

        Advance adv = advance(t, iv);
        trace.breakpoints.push_back(Breakpoint{iv.xi2, adv.kind, adv.pivots.front().leaving,
                                               adv.pivots.front().entering, adv.pivots});
        xi_prev = iv.xi2;
        basis = std::move(adv.basis);
    }
    build_table(trace, t);
    return trace;
}

}   // namespace rank1
