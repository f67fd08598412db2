#include <gtest/gtest.h>

#include "rank1/errors.hpp"
#include "rank1/game.hpp"
#include "rank1/oracle.hpp"
#include "test_support.hpp"

using namespace rank1;
using namespace rank1::testing;

namespace {

std::vector<MixedStrategyPair> oracle_set(const BimatrixGame& g)
{
    return strategies_of(support_enumeration(g, {false, Execution::Serial}).equilibria);
}

RVector renormalized(RVector v, std::size_t k, const Rational& s)
{
    v[k] /= s;
    Rational total = 0;
    for (const auto& e : v)
        total += e;
    for (auto& e : v)
        e /= total;
    return v;
}

}   // namespace

TEST(Game, ConstructionValidatesShapes)
{
    EXPECT_THROW(BimatrixGame(RMatrix(2, 2), RMatrix(2, 3)), PreconditionError);
    EXPECT_THROW(BimatrixGame(RMatrix(0, 0), RMatrix(0, 0)), PreconditionError);
}

TEST(Game, LossAtPureProfile)
{
    // max(-28, -8) + max(10, 30) - (-28 + 10) = 40
    EXPECT_EQ(loss(unreachable_mixed_game(), pair({1, 0}, {1, 0})), 40);
    EXPECT_EQ(loss(unreachable_mixed_game(), pair({q(1, 5), q(4, 5)}, {q(1, 5), q(4, 5)})), 0);
}

TEST(Game, IsNashOnKnownEquilibria)
{
    const auto g = unreachable_mixed_game();
    const NashCheck c = is_nash(g, pair({q(1, 5), q(4, 5)}, {q(1, 5), q(4, 5)}));
    EXPECT_TRUE(c.is_nash);
    EXPECT_EQ(c.payoff1, -20);
    EXPECT_EQ(c.payoff2, 18);
    EXPECT_FALSE(is_nash(g, pair({1, 0}, {1, 0})).is_nash);
}

TEST(Game, Rank)
{
    EXPECT_EQ(game_rank(unreachable_mixed_game()), 1u);
    EXPECT_EQ(game_rank(example_2x3_game()), 2u);
    EXPECT_EQ(game_rank(BimatrixGame({{1, -2}, {3, 0}}, {{-1, 2}, {-3, 0}})), 0u);
    for (std::size_t d = 1; d <= 5; ++d)
        EXPECT_EQ(game_rank(generate_kt(d)), 1u);
}

TEST(Game, GenerateKt)
{
    EXPECT_EQ(generate_kt(1), BimatrixGame({{2}}, {{2}}));
    EXPECT_EQ(generate_kt(2), BimatrixGame({{2, 7}, {1, 8}}, {{2, 1}, {7, 8}}));
    const auto g = generate_kt(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            EXPECT_EQ(g.sum()(i, j), 4 * (i + 1) * (j + 1));
    EXPECT_THROW(generate_kt(0), PreconditionError);
}

TEST(Game, FactorRankOne)
{
    const auto f = factor_rank1(unreachable_mixed_game());
    // A + B = ((-18, 12), (12, -8)).
    EXPECT_EQ(f.c, (RVector{-18, 12}));
    EXPECT_EQ(f.b, (RVector{1, q(-2, 3)}));
    EXPECT_THROW(factor_rank1(example_2x3_game()), NotRankOneError);
    EXPECT_THROW(factor_rank1(BimatrixGame({{1}}, {{-1}})), NotRankOneError);
}

TEST(Game, CheckedFactorization)
{
    const auto g = generate_kt(2);
    EXPECT_NO_THROW(RankOneFactorization::checked(g, {2, 4}, {2, 4}));
    EXPECT_THROW(RankOneFactorization::checked(g, {2, 4}, {2, 5}), FactorizationMismatchError);
    EXPECT_THROW(RankOneFactorization::checked(g, {2}, {2, 4}), FactorizationMismatchError);
    const auto r = RankOneFactorization{{2, 4}, {2, 4}}.rescaled(q(-1, 3));
    EXPECT_EQ(r.b, (RVector{-6, -12}));
    EXPECT_EQ(r.c, (RVector{q(-2, 3), q(-4, 3)}));
    EXPECT_NO_THROW(RankOneFactorization::checked(g, r.b, r.c));
}

TEST(Game, ClassifySpecial)
{
    EXPECT_TRUE(std::holds_alternative<ZeroSum>(classify_special(BimatrixGame({{1, 2}}, {{-1, -2}}))));
    const auto rc = classify_special(BimatrixGame({{1, 1}, {2, 2}}, RMatrix(2, 2)));
    ASSERT_TRUE(std::holds_alternative<RowConstant>(rc));
    EXPECT_EQ(std::get<RowConstant>(rc).u, (RVector{1, 2}));
    EXPECT_TRUE(std::holds_alternative<General>(classify_special(unreachable_mixed_game())));
}

TEST(Game, ReduceRowConstant)
{
    const BimatrixGame g({{1, 1}, {2, 2}}, RMatrix(2, 2));
    const auto h = reduce_row_constant(g, {1, 2});
    EXPECT_EQ(h.B(), RMatrix({{-1, -1}, {-2, -2}}));
    EXPECT_TRUE(h.sum().is_zero());
    EXPECT_THROW(reduce_row_constant(unreachable_mixed_game(), {1, 2}), NotRowConstantError);
}

TEST(Game, ReduceRowConstantPreservesOracleSet)
{
    std::mt19937 rng(7);
    for (int it = 0; it < 20; ++it)
    {
        const auto g = random_row_constant_game(rng, 3, 3);
        const auto u = std::get<RowConstant>(classify_special(g)).u;
        EXPECT_EQ(oracle_set(g), oracle_set(reduce_row_constant(g, u))) << "iteration " << it;
    }
}

TEST(Game, ReduceRankLowersRankAndPreservesOracleSet)
{
    std::mt19937 rng(11);
    int done = 0;
    while (done < 20)
    {
        const BimatrixGame g(random_matrix(rng, 3, 3), random_matrix(rng, 3, 3));
        if (game_rank(g) != 3)
            continue;
        const auto step = rank_reduction_step(g);
        const auto h = reduce_rank(g);
        EXPECT_EQ(game_rank(h), 2u);
        EXPECT_EQ(h, transform(g, AddToColumnOfA{step.column, step.lambda}));
        EXPECT_EQ(oracle_set(g), oracle_set(h));
        ++done;
    }
    EXPECT_THROW(reduce_rank(unreachable_mixed_game()), NotFullRankError);
    EXPECT_THROW(reduce_rank(example_2x3_game()), NotFullRankError);
}

TEST(Game, AdditiveTransformsPreserveOracleSet)
{
    const auto g = example_2x3_game();
    EXPECT_EQ(oracle_set(g), oracle_set(transform(g, AddToColumnOfA{1, 5})));
    EXPECT_EQ(oracle_set(g), oracle_set(transform(g, AddToRowOfB{0, -7})));
    EXPECT_EQ(transform(g, ScaleColumnOfA{0, 1}), g);
}

TEST(Game, ScalingTransformsMapEquilibriaByRenormalization)
{
    // Scaling a column of A by s moves the column player's mixed strategy:
    // y -> y with y_j / s, renormalized. Pure equilibria are fixed.
    const auto g = unreachable_mixed_game();
    const auto base = oracle_set(g);

    std::vector<MixedStrategyPair> mapped;
    for (const auto& s : base)
        mapped.push_back(pair(renormalized(s.x, 0, 2), s.y));
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(oracle_set(transform(g, ScaleRowOfB{0, 2})), mapped);

    mapped.clear();
    for (const auto& s : base)
        mapped.push_back(pair(s.x, renormalized(s.y, 1, q(3, 2))));
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(oracle_set(transform(g, ScaleColumnOfA{1, q(3, 2)})), mapped);

    // The mixed equilibrium itself is not invariant.
    const auto scaled = oracle_set(transform(g, ScaleRowOfB{0, 2}));
    EXPECT_NE(scaled, base);
    EXPECT_TRUE(std::find(scaled.begin(), scaled.end(), pair({q(1, 9), q(8, 9)}, {q(1, 5), q(4, 5)})) !=
                scaled.end());
}

TEST(Game, TransformErrors)
{
    const auto g = example_2x3_game();
    EXPECT_THROW(transform(g, ScaleColumnOfA{0, 0}), NonPositiveScaleError);
    EXPECT_THROW(transform(g, ScaleRowOfB{0, -1}), NonPositiveScaleError);
    EXPECT_THROW(transform(g, AddToColumnOfA{3, 1}), std::out_of_range);
    EXPECT_THROW(transform(g, AddToRowOfB{2, 1}), std::out_of_range);
}

TEST(Game, CanonicalSetAndMakePoint)
{
    const auto g = unreachable_mixed_game();
    const auto p = make_point(g, pair({1, 0}, {0, 1}));
    EXPECT_EQ(p.payoff1, -18);
    EXPECT_EQ(p.payoff2, 30);
    const auto set = canonical_set({p, make_point(g, pair({0, 1}, {1, 0})), p});
    ASSERT_EQ(set.size(), 2u);
    EXPECT_TRUE(set[0].strategies < set[1].strategies);
    EXPECT_TRUE(same_strategy_set(set, {set[1], set[0]}));
    EXPECT_TRUE(pair({q(1, 2), q(1, 2)}, {1, 0}).valid_for(g));
    EXPECT_FALSE(pair({q(1, 2), q(1, 3)}, {1, 0}).valid_for(g));
    EXPECT_FALSE(pair({-1, 2}, {1, 0}).valid_for(g));
}
