#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rank1/game.hpp"
#include "rank1/polytope.hpp"
#include "rank1/simplex.hpp"

namespace rank1 {

/**
 * Parametric linear program LP(xi) for a rank-1 game with A + B = b c^T:
 *
 *     max (x^T b) xi - pi1 - pi2   s.t.  M1 z <= 0,  M2 z = (1, 1, xi)
 *
 * over z = (x, y, pi1, pi2). M1 has K = 2(m+n) rows: -x (P labels 1..m),
 * B^T x - pi2 (P labels m+1..m+n), A y - pi1 (global rows m+n+1..2m+n) and
 * -y (global rows 2m+n+1..K). M2 holds 1^T x, 1^T y and c^T y.
 *
 * Constraint indices exposed by this module are the 1-based M1 row numbers.
 */
struct ParametricTableau
{
    std::size_t m = 0;
    std::size_t n = 0;
    RankOneFactorization factorization;
    RMatrix m1;
    RMatrix m2;
    RVector e2_const;
    RVector e2_slope;
    RVector dual_rhs_const;   // (0,...,0, -1, -1)
    RVector dual_rhs_slope;   // (b_1, ..., b_m, 0, ..., 0)

    std::size_t K() const noexcept { return 2 * (m + n); }
    std::size_t N() const noexcept { return m + n + 2; }

    std::size_t x_offset() const noexcept { return 0; }
    std::size_t y_offset() const noexcept { return m; }
    std::size_t pi1_index() const noexcept { return m + n; }
    std::size_t pi2_index() const noexcept { return m + n + 1; }
};

/** Throws FactorizationMismatchError unless b c^T = A + B. */
ParametricTableau build_tableau(const BimatrixGame& g, const RankOneFactorization& f);

/** (min_j c_j, max_j c_j). */
std::pair<Rational, Rational> xi_range(const RankOneFactorization& f);

/** Binding M1 rows: |I| = m rows from 1..m+n and |J| = n-1 rows from m+n+1..K. */
struct ParametricBasis
{
    std::vector<int> rows;   // ascending global indices

    /** P-side labels (1..m+n). */
    LabelSet I(const ParametricTableau& t) const;
    /** Q-side labels (1..m+n). */
    LabelSet J(const ParametricTableau& t) const;

    friend auto operator<=>(const ParametricBasis&, const ParametricBasis&) = default;
};

/**
 * An optimal basis of LP(xi): two-phase simplex at xi followed by pivots
 * that keep the basis optimal for values just above xi (when xi < xi_max).
 * Throws InfeasibleError / UnboundedError, which indicate a tableau bug.
 */
ParametricBasis initial_basis(const ParametricTableau& t, const Rational& xi);

struct BasisSolution
{
    AffineRVector z;   // length N
    AffineRVector u;   // length K + 3; zero outside the basis and the equality duals
};

/** Solves the basis system for z(xi) and the complementary dual u(xi). Throws SingularBasisError. */
BasisSolution solve_basis(const ParametricTableau& t, const ParametricBasis& basis);

struct BasisInterval
{
    ParametricBasis basis;
    AffineRVector z;
    AffineRVector u;
    Rational xi1;
    Rational xi2;
    // Unclipped bounds from primal feasibility (alpha) and dual feasibility
    // (beta); nullopt means unbounded on that side.
    std::optional<Rational> alpha1;
    std::optional<Rational> alpha2;
    std::optional<Rational> beta1;
    std::optional<Rational> beta2;
    QuadraticR objective;

    /** x, y, pi1, pi2 at xi. */
    RVector point(const Rational& xi) const { return z.at(xi); }
};

/**
 * [xi1, xi2] = [max(alpha1, beta1), min(alpha2, beta2)] clipped to the xi range,
 * and objective (x(xi)^T b) xi - pi1(xi) - pi2(xi). Throws EmptyIntervalError.
 */
BasisInterval basis_interval(const ParametricTableau& t, const ParametricBasis& basis, const BasisSolution& sol);

/** Binding M1 rows of the basis solution at xi (1-based). */
LabelSet binding_rows(const ParametricTableau& t, const AffineRVector& z, const Rational& xi);

enum class PivotCase { Feasibility, Optimality, Both };

std::string to_string(PivotCase c);

struct Pivot
{
    int leaving;
    int entering;
    bool dual_step;   // dual simplex step (a row became violated) vs primal step
};

struct Advance
{
    ParametricBasis basis;
    PivotCase kind;
    std::vector<Pivot> pivots;
};

/**
 * Moves past interval.xi2: a violated row enters by a dual simplex step,
 * a dual variable that turned negative leaves by a primal simplex step,
 * repeated until the basis is optimal just above xi2. Ties in the ratio
 * tests are broken lexicographically, then by lowest index.
 * Throws StalledError when no admissible pivot exists.
 */
Advance advance(const ParametricTableau& t, const BasisInterval& interval);

/**
 * Equilibria at the zeros of the interval objective. Throws
 * DegenerateGameError when the objective vanishes identically.
 */
std::vector<EquilibriumPoint> equilibria_on_interval(const BimatrixGame& g, const ParametricTableau& t,
                                                     const BasisInterval& interval);

struct Breakpoint
{
    Rational xi;
    PivotCase kind;
    int leaving;
    int entering;
    std::vector<Pivot> pivots;
};

/** One row of the xi-sweep table: a single value of xi or an open interval. */
struct TraceRow
{
    Rational xi1;
    Rational xi2;   // equal to xi1 for a point row
    bool is_point;
    /** Objective at the point; for open rows the value at the midpoint. */
    Rational objective;
    LabelSet binding;
};

enum class SweepPath { General, ZeroSum, RowConstant };

struct SweepTrace
{
    SweepPath path = SweepPath::General;
    std::vector<BasisInterval> intervals;
    std::vector<EquilibriumPoint> equilibria;
    std::vector<Breakpoint> breakpoints;
    std::vector<TraceRow> table;
};

struct EnumerateOptions
{
    /** Use this (b, c) instead of the canonical factorization. */
    std::optional<RankOneFactorization> factorization;
    /** Run the polyhedral non-degeneracy test before sweeping. */
    bool check_degeneracy = true;
    Execution exec = Execution::Parallel;
};

/**
 * All Nash equilibria of a non-degenerate game of rank at most 1.
 * Zero-sum games are solved as a single LP; row-constant games are first
 * reduced to zero-sum; otherwise xi is swept from xi_min to xi_max.
 * Throws DegenerateGameError or NotRankOneError.
 */
SweepTrace enumerate_all(const BimatrixGame& g, const EnumerateOptions& options = {});

/** The dual equality system (M1^T | M2^T) u = f(xi) as a matrix, N x (K + 3). */
RMatrix dual_constraint_matrix(const ParametricTableau& t);

/**
 * LP(xi) in standard form over w = (slack of each M1 row, pi1', pi2'),
 * where pi1 = pi1' + min(A) - 1 and pi2 = pi2' + min(B) - 1 so all
 * variables are nonnegative. Without `with_xi_row` the c^T y = xi row is
 * omitted (zero-sum case).
 */
struct StandardForm
{
    StandardLp lp;
    Rational pi1_shift;
    Rational pi2_shift;
};
StandardForm standard_form(const ParametricTableau& t, const Rational& xi, bool with_xi_row);

}   // namespace rank1
