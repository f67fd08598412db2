#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rank1/polytope.hpp"

namespace rank1 {

/**
 * Vertex graph of P (side P) or Q (side Q). Vertex 0 is the artificial
 * vertex with labels {1..m} on the P side and {m+1..m+n} on the Q side;
 * the polyhedron's vertices follow in enumeration order. Two vertices are
 * adjacent iff they share all but one label.
 */
struct LHGraph
{
    Side side;
    std::vector<LabeledVertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;   // (a, b) with a < b
    std::vector<std::vector<std::size_t>> adjacent;

    static constexpr std::size_t artificial = 0;

    /** Neighbour reached by dropping `label` from vertex v, if any. */
    std::optional<std::size_t> drop(std::size_t v, int label) const;
};

/** Throws DegenerateGameError. */
std::pair<LHGraph, LHGraph> build_lh_graphs(const BimatrixGame& g, Execution exec = Execution::Parallel);

struct LHStep
{
    std::size_t v1;
    std::size_t v2;
    std::optional<Side> moved;   // graph in which the step to this pair was taken
};

struct ArtificialLoop {};

struct LHPath
{
    int missing_label;
    std::vector<LHStep> steps;   // starts at the artificial pair
    std::variant<EquilibriumPoint, ArtificialLoop> terminal;

    /** "({1,2}|{3,4}) -> ..." using the vertex labels of each pair. */
    std::string label_trace(const LHGraph& g1, const LHGraph& g2) const;
};

/**
 * Lemke-Howson path for missing label r (1-based) from the artificial pair.
 * Throws DegenerateGameError, std::out_of_range for a bad r, and LpError if
 * the step limit |V1| |V2| + 1 is exceeded.
 */
LHPath lh_run(const BimatrixGame& g, int r);
LHPath lh_run(const LHGraph& g1, const LHGraph& g2, const BimatrixGame& g, int r);

struct Reachability
{
    std::map<int, EquilibriumPoint> reached;   // r -> terminal equilibrium
    std::vector<EquilibriumPoint> unreached;
};

Reachability reachability(const BimatrixGame& g, Execution exec = Execution::Parallel);

/**
 * Connected components of G' on V1 x V2: pairs whose labels cover all but
 * at most one label, joined by edges along which the same holds.
 */
struct GPrimeReport
{
    struct Node
    {
        std::size_t v1;
        std::size_t v2;
        std::size_t component;
    };
    std::vector<Node> nodes;   // sorted by (v1, v2)
    std::size_t component_count = 0;
    std::size_t artificial_component = 0;

    struct Equilibrium
    {
        EquilibriumPoint point;
        std::size_t v1;
        std::size_t v2;
        std::size_t component;
        bool with_artificial;
    };
    std::vector<Equilibrium> equilibria;
};

GPrimeReport gprime_components(const BimatrixGame& g, Execution exec = Execution::Parallel);

}   // namespace rank1
