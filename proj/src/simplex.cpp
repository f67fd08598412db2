#include "rank1/simplex.hpp"

#include <algorithm>
#include <optional>

#include "rank1/errors.hpp"

namespace rank1 {

bool LpSolution::is_basic(std::size_t var) const
{
    return std::find(basic.begin(), basic.end(), var) != basic.end();
}

namespace {

/**
 * Tableau with rows = constraints, columns = structural variables followed
 * by one artificial per row, then the right-hand side.
 */
class Tableau
{
    public:
        Tableau(const StandardLp& lp) : rows_(lp.a.rows()), vars_(lp.a.cols()),
                                        t_(rows_, vars_ + rows_ + 1), basic_(rows_), active_(rows_, true)
        {
            for (std::size_t r = 0; r < rows_; ++r)
            {
                const bool flip = lp.b[r] < 0;
                for (std::size_t j = 0; j < vars_; ++j)
                    t_(r, j) = flip ? Rational(-lp.a(r, j)) : lp.a(r, j);
                t_(r, vars_ + r) = 1;
                t_(r, rhs_col()) = flip ? Rational(-lp.b[r]) : lp.b[r];
                basic_[r] = vars_ + r;
            }
        }

        std::size_t rhs_col() const { return vars_ + rows_; }
        bool is_artificial(std::size_t col) const { return col >= vars_ && col < vars_ + rows_; }

        /**
         * Maximizes cost^T v (cost indexed over all non-rhs columns) with
         * Bland's rule; `allowed(col)` restricts entering columns.
         */
        template <class Allowed>
        void optimize(const RVector& cost, Allowed allowed)
        {
            while (true)
            {
                std::optional<std::size_t> entering;
                for (std::size_t j = 0; j < rhs_col() && !entering; ++j)
                {
                    if (!allowed(j) || is_basic(j))
                        continue;
                    if (reduced_cost(cost, j) > 0)
                        entering = j;
                }
                if (!entering)
                    return;

                std::optional<std::size_t> leaving;
                Rational best;
                for (std::size_t r = 0; r < rows_; ++r)
                {
                    if (!active_[r] || t_(r, *entering) <= 0)
                        continue;
                    const Rational ratio = t_(r, rhs_col()) / t_(r, *entering);
                    if (!leaving || ratio < best || (ratio == best && basic_[r] < basic_[*leaving]))
                    {
                        leaving = r;
                        best = ratio;
                    }
                }
                if (!leaving)
                    throw UnboundedError();
                pivot(*leaving, *entering);
            }
        }

        Rational objective(const RVector& cost) const
        {
            Rational s = 0;
            for (std::size_t r = 0; r < rows_; ++r)
            {
                if (active_[r])
                    s += cost[basic_[r]] * t_(r, rhs_col());
            }
            return s;
        }

        /** Pivots artificial variables out of the basis; drops redundant rows. */
        std::vector<std::size_t> expel_artificials()
        {
            std::vector<std::size_t> dropped;
            for (std::size_t r = 0; r < rows_; ++r)
            {
                if (!active_[r] || !is_artificial(basic_[r]))
                    continue;
                std::optional<std::size_t> col;
                for (std::size_t j = 0; j < vars_ && !col; ++j)
                {
                    if (t_(r, j) != 0 && !is_basic(j))
                        col = j;
                }
                if (col)
                {
                    pivot(r, *col);
                }
                else
                {
                    active_[r] = false;
                    dropped.push_back(r);
                }
            }
            return dropped;
        }

        LpSolution solution(const RVector& cost) const
        {
            LpSolution s;
            s.v.assign(vars_, Rational(0));
            for (std::size_t r = 0; r < rows_; ++r)
            {
                if (!active_[r])
                    continue;
                s.basic.push_back(basic_[r]);
                if (basic_[r] < vars_)
                    s.v[basic_[r]] = t_(r, rhs_col());
            }
            s.objective = objective(cost);
            return s;
        }

    private:
        bool is_basic(std::size_t col) const
        {
            for (std::size_t r = 0; r < rows_; ++r)
            {
                if (active_[r] && basic_[r] == col)
                    return true;
            }
            return false;
        }

        Rational reduced_cost(const RVector& cost, std::size_t j) const
        {
            Rational d = cost[j];
            for (std::size_t r = 0; r < rows_; ++r)
            {
                if (active_[r] && t_(r, j) != 0)
                    d -= cost[basic_[r]] * t_(r, j);
            }
            return d;
        }

        void pivot(std::size_t row, std::size_t col)
        {
            const Rational inv = 1 / t_(row, col);
            for (std::size_t j = 0; j <= rhs_col(); ++j)
                t_(row, j) *= inv;
            for (std::size_t r = 0; r < rows_; ++r)
            {
                if (r == row || !active_[r] || t_(r, col) == 0)
                    continue;
                const Rational f = t_(r, col);
                for (std::size_t j = 0; j <= rhs_col(); ++j)
                {
                    if (t_(row, j) != 0)
                        t_(r, j) -= f * t_(row, j);
                }
            }
            basic_[row] = col;
        }

        std::size_t rows_;
        std::size_t vars_;
        RMatrix t_;
        std::vector<std::size_t> basic_;
        std::vector<bool> active_;
};

}   // namespace

LpSolution solve_standard_lp(const StandardLp& lp)
{
    if (lp.a.rows() != lp.b.size() || lp.a.cols() != lp.c.size())
        throw std::invalid_argument("solve_standard_lp: dimension mismatch");
    const std::size_t vars = lp.a.cols();
    const std::size_t rows = lp.a.rows();

    Tableau tab(lp);

    // Phase 1: maximize -(sum of artificials).
    RVector phase1(vars + rows);
    for (std::size_t r = 0; r < rows; ++r)
        phase1[vars + r] = -1;
    tab.optimize(phase1, [](std::size_t) { return true; });
    if (tab.objective(phase1) < 0)
        throw InfeasibleError();
    const auto dropped = tab.expel_artificials();

    // Phase 2 on the structural columns only.
    RVector phase2(vars + rows);
    std::copy(lp.c.begin(), lp.c.end(), phase2.begin());
    tab.optimize(phase2, [&](std::size_t j) { return j < vars; });

    LpSolution sol = tab.solution(phase2);
    sol.dropped_rows = dropped;
    return sol;
}

}   // namespace rank1
