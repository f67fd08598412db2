#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "rank1/linalg.hpp"

namespace rank1 {

/** Two-player game with payoff matrices A (row player) and B (column player). */
class BimatrixGame
{
    public:
        BimatrixGame(RMatrix a, RMatrix b);

        std::size_t m() const noexcept { return a_.rows(); }
        std::size_t n() const noexcept { return a_.cols(); }
        const RMatrix& A() const noexcept { return a_; }
        const RMatrix& B() const noexcept { return b_; }

        /** A + B. */
        RMatrix sum() const { return a_ + b_; }

        friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;

    private:
        RMatrix a_;
        RMatrix b_;
};

struct MixedStrategyPair
{
    RVector x;
    RVector y;

    /** Nonnegative entries summing to one, with lengths m and n. */
    bool valid_for(const BimatrixGame& g) const;

    friend auto operator<=>(const MixedStrategyPair&, const MixedStrategyPair&) = default;
    friend bool operator==(const MixedStrategyPair&, const MixedStrategyPair&) = default;
};

struct EquilibriumPoint
{
    MixedStrategyPair strategies;
    Rational payoff1;
    Rational payoff2;
    std::optional<Rational> source_xi;
};

/** Sorts by strategy pair and drops entries with equal strategies (first one wins). */
std::vector<EquilibriumPoint> canonical_set(std::vector<EquilibriumPoint> points);

/** Set equality on strategy pairs. */
bool same_strategy_set(const std::vector<EquilibriumPoint>& a, const std::vector<EquilibriumPoint>& b);

struct NashCheck
{
    bool is_nash = false;
    Rational payoff1;   // max_i A^(i) y
    Rational payoff2;   // max_j x^T B_(j)
};

/** Best-response test x^T A y = max_i A^(i) y and x^T B y = max_j x^T B_(j), exactly. */
NashCheck is_nash(const BimatrixGame& g, const MixedStrategyPair& s);

/** Sum of both players' regrets: max_i A^(i) y + max_j x^T B_(j) - x^T (A+B) y. */
Rational loss(const BimatrixGame& g, const MixedStrategyPair& s);

/** Builds an EquilibriumPoint with best-response payoffs; does not check the Nash property. */
EquilibriumPoint make_point(const BimatrixGame& g, MixedStrategyPair s,
                            std::optional<Rational> source_xi = std::nullopt);

std::size_t game_rank(const BimatrixGame& g);

/** A + B = b * c^T. */
struct RankOneFactorization
{
    RVector b;
    RVector c;

    /** Validating constructor; throws FactorizationMismatchError. */
    static RankOneFactorization checked(const BimatrixGame& g, RVector b, RVector c);

    /** (b / t, t * c). */
    RankOneFactorization rescaled(const Rational& t) const;
};

/**
 * Canonical factorization: c is the first nonzero row of C = A + B and
 * b_i = C(i, j0) / c_j0 for the first j0 with c_j0 != 0.
 * Throws NotRankOneError unless rank(C) == 1.
 */
RankOneFactorization factor_rank1(const BimatrixGame& g);

/**
 * Adds lambda * (1,...,1)^T to one column of A so that rank(A + B) drops.
 * The column is the first one for which such a lambda exists. Requires a
 * square game of full rank d >= 2; throws NotFullRankError otherwise.
 */
BimatrixGame reduce_rank(const BimatrixGame& g);

/** The column index and shift used by reduce_rank. */
struct RankReductionStep
{
    std::size_t column;
    Rational lambda;
};
RankReductionStep rank_reduction_step(const BimatrixGame& g);

struct ZeroSum {};
struct RowConstant
{
    RVector u;
};
struct General {};
using SpecialClass = std::variant<ZeroSum, RowConstant, General>;

SpecialClass classify_special(const BimatrixGame& g);

/** Replaces B by B' with b'_ij = b_ij - u_i. Throws NotRowConstantError. */
BimatrixGame reduce_row_constant(const BimatrixGame& g, const RVector& u);

// Equilibrium-preserving transformations. Indices are zero-based.
struct AddToColumnOfA   { std::size_t j; Rational lambda; };
struct AddToRowOfB      { std::size_t i; Rational lambda; };
struct ScaleColumnOfA   { std::size_t j; Rational s; };
struct ScaleRowOfB      { std::size_t i; Rational s; };
using GameTransform = std::variant<AddToColumnOfA, AddToRowOfB, ScaleColumnOfA, ScaleRowOfB>;

/** Throws NonPositiveScaleError for s <= 0. */
BimatrixGame transform(const BimatrixGame& g, const GameTransform& op);

/**
 * d x d game with a_ij = 2ij - i^2 + j^2 and b_ij = 2ij + i^2 - j^2
 * (1-based i, j). A + B = (4ij) has rank 1.
 */
BimatrixGame generate_kt(std::size_t d);

}   // namespace rank1
