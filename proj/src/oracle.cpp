#include "rank1/oracle.hpp"

#include <algorithm>
#include <optional>

namespace rank1 {

namespace {

struct SupportPair
{
    std::vector<std::size_t> rows;   // support of x
    std::vector<std::size_t> cols;   // support of y
};

struct Candidate
{
    EquilibriumPoint point;
    bool suspect = false;
};

/**
 * Probabilities on `support` (length `len`) making every strategy in
 * `indifferent` earn the same payoff `value`; `payoff(k, s)` is the payoff
 * of opponent strategy k against own pure strategy s.
 */
template <class Payoff>
std::optional<std::pair<RVector, Rational>> indifference(const std::vector<std::size_t>& support, std::size_t len,
                                                         const std::vector<std::size_t>& indifferent,
                                                         Payoff payoff)
{
    const std::size_t k = support.size();
    RMatrix sys(indifferent.size() + 1, k + 1);
    RVector rhs(indifferent.size() + 1);
    for (std::size_t r = 0; r < indifferent.size(); ++r)
    {
        for (std::size_t c = 0; c < k; ++c)
            sys(r, c) = payoff(indifferent[r], support[c]);
        sys(r, k) = -1;
    }
    for (std::size_t c = 0; c < k; ++c)
        sys(indifferent.size(), c) = 1;
    rhs[indifferent.size()] = 1;

    const auto sol = solve_unique(sys, rhs);
    if (!sol)
        return std::nullopt;
    RVector full(len);
    for (std::size_t c = 0; c < k; ++c)
    {
        if ((*sol)[c] < 0)
            return std::nullopt;
        full[support[c]] = (*sol)[c];
    }
    return std::make_pair(std::move(full), (*sol)[k]);
}

std::size_t support_size(const RVector& v)
{
    std::size_t s = 0;
    for (const auto& e : v)
        s += (e != 0);
    return s;
}

std::optional<Candidate> check_support(const BimatrixGame& g, const SupportPair& sp)
{
    const auto& a = g.A();
    const auto& b = g.B();

    auto y = indifference(sp.cols, g.n(), sp.rows,
                          [&](std::size_t i, std::size_t j) { return a(i, j); });
    if (!y)
        return std::nullopt;
    auto x = indifference(sp.rows, g.m(), sp.cols,
                          [&](std::size_t j, std::size_t i) { return b(i, j); });
    if (!x)
        return std::nullopt;

    const RVector ay = a * y->first;
    std::size_t best1 = 0;
    for (const auto& v : ay)
    {
        if (v > y->second)
            return std::nullopt;
        best1 += (v == y->second);
    }
    std::size_t best2 = 0;
    for (std::size_t j = 0; j < g.n(); ++j)
    {
        Rational v = 0;
        for (std::size_t i = 0; i < g.m(); ++i)
            v += x->first[i] * b(i, j);
        if (v > x->second)
            return std::nullopt;
        best2 += (v == x->second);
    }

    Candidate c;
    c.suspect = best1 > support_size(y->first) || best2 > support_size(x->first);
    c.point = EquilibriumPoint{MixedStrategyPair{std::move(x->first), std::move(y->first)},
                               y->second, x->second, std::nullopt};
    return c;
}

std::vector<SupportPair> support_pairs(std::size_t m, std::size_t n, bool strict)
{
    std::vector<SupportPair> pairs;
    for (std::size_t k1 = 1; k1 <= m; ++k1)
        for (std::size_t k2 = 1; k2 <= n; ++k2)
        {
            if (!strict && k1 != k2)
                continue;
            for (const auto& rows : combinations(m, k1))
                for (const auto& cols : combinations(n, k2))
                    pairs.push_back(SupportPair{rows, cols});
        }
    return pairs;
}

}   // namespace

OracleResult support_enumeration(const BimatrixGame& g, const OracleOptions& options)
{
    const auto pairs = support_pairs(g.m(), g.n(), options.strict);
    std::vector<std::optional<Candidate>> found(pairs.size());

    if (options.exec == Execution::Parallel)
    {
        const long count = static_cast<long>(pairs.size());
        #pragma omp parallel for schedule(dynamic, 4)
        for (long k = 0; k < count; ++k)
            found[k] = check_support(g, pairs[k]);
    }
    else
    {
        for (std::size_t k = 0; k < pairs.size(); ++k)
            found[k] = check_support(g, pairs[k]);
    }

    OracleResult result;
    for (auto& c : found)
    {
        if (!c)
            continue;
        result.degenerate_suspect = result.degenerate_suspect || c->suspect;
        const bool duplicate = std::any_of(result.equilibria.begin(), result.equilibria.end(),
                                           [&](const auto& e) { return e.strategies == c->point.strategies; });
        if (!duplicate)
            result.equilibria.push_back(std::move(c->point));
    }
    return result;
}

}   // namespace rank1
