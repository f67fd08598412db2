#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rank1/execution.hpp"
#include "rank1/game.hpp"

namespace rank1 {

enum class Side { P, Q };

/**
 * Best-response polyhedra of an m x n game, over (x, pi2) for P and (y, pi1)
 * for Q. Row k of `inequalities` is label k+1:
 *
 *   P:  labels 1..m      -x_i <= 0
 *       labels m+1..m+n  x^T B_(j) - pi2 <= 0
 *   Q:  labels 1..m      A^(i) y - pi1 <= 0
 *       labels m+1..m+n  -y_j <= 0
 *
 * plus the normalization 1^T x = 1 (resp. 1^T y = 1).
 */
struct LabeledPolyhedron
{
    Side which;
    std::size_t m;
    std::size_t n;
    RMatrix inequalities;   // (m+n) x ambient_dim, right-hand side zero
    RVector equality;       // ambient_dim, right-hand side one

    std::size_t ambient_dim() const noexcept { return inequalities.cols(); }
    /** m for P, n for Q. */
    std::size_t strategy_dim() const noexcept { return ambient_dim() - 1; }
    std::size_t label_count() const noexcept { return m + n; }
};

/** Labels are the 1-based indices of binding inequalities, ascending. */
using LabelSet = std::vector<int>;

struct LabeledVertex
{
    RVector point;   // strategy coordinates followed by the payoff coordinate
    LabelSet labels;

    friend bool operator==(const LabeledVertex&, const LabeledVertex&) = default;
};

std::string to_string(const LabelSet& labels);

LabeledPolyhedron build_polyhedron(const BimatrixGame& g, Side which);

/** Labels of the inequalities binding at `point`. */
LabelSet binding_labels(const LabeledPolyhedron& p, const RVector& point);

/** True if `point` satisfies every inequality and the normalization. */
bool contains(const LabeledPolyhedron& p, const RVector& point);

/**
 * All vertices by exhaustive basis enumeration: every choice of
 * strategy_dim inequalities is solved together with the normalization and
 * kept when feasible. Vertices appear in lexicographic order of the first
 * basis that produced them.
 */
std::vector<LabeledVertex> enumerate_vertices(const LabeledPolyhedron& p,
                                              Execution exec = Execution::Parallel);

struct DegeneracyReport
{
    bool nondegenerate = true;
    std::optional<Side> witness_side;
    std::optional<LabeledVertex> witness;

    std::string describe() const;
};

/** Non-degenerate iff every P-vertex has exactly m labels and every Q-vertex n. */
DegeneracyReport check_nondegenerate(const BimatrixGame& g, Execution exec = Execution::Parallel);

/** Converts a completely labeled vertex pair to an equilibrium. */
EquilibriumPoint point_from_vertices(const BimatrixGame& g, const LabeledVertex& p_vertex,
                                     const LabeledVertex& q_vertex);

/**
 * Equilibria as completely labeled (P-vertex, Q-vertex) pairs.
 * Throws DegenerateGameError when the game is degenerate.
 */
std::vector<EquilibriumPoint> equilibria_by_labels(const BimatrixGame& g,
                                                   Execution exec = Execution::Parallel);

}   // namespace rank1
