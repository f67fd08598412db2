#include "rank1/lemke_howson.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rank1/errors.hpp"

namespace rank1 {

namespace {

LabelSet intersect(const LabelSet& a, const LabelSet& b)
{
    LabelSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

LabelSet unite(const LabelSet& a, const LabelSet& b)
{
    LabelSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool has_label(const LabelSet& s, int label)
{
    return std::binary_search(s.begin(), s.end(), label);
}

LHGraph make_graph(const BimatrixGame& g, Side side, Execution exec)
{
    const LabeledPolyhedron p = build_polyhedron(g, side);
    const std::size_t own = p.strategy_dim();

    LHGraph graph;
    graph.side = side;
    LabeledVertex zero{RVector(p.ambient_dim()), {}};
    const int first = side == Side::P ? 1 : static_cast<int>(g.m()) + 1;
    for (std::size_t k = 0; k < own; ++k)
        zero.labels.push_back(first + static_cast<int>(k));
    graph.vertices.push_back(std::move(zero));

    for (auto& v : enumerate_vertices(p, exec))
    {
        if (v.labels.size() != own)
        {
            DegeneracyReport r{false, side, v};
            throw DegenerateGameError("degenerate game", r.describe());
        }
        graph.vertices.push_back(std::move(v));
    }

    graph.adjacent.resize(graph.vertices.size());
    for (std::size_t a = 0; a < graph.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < graph.vertices.size(); ++b)
        {
            if (intersect(graph.vertices[a].labels, graph.vertices[b].labels).size() + 1 == own)
            {
                graph.edges.emplace_back(a, b);
                graph.adjacent[a].push_back(b);
                graph.adjacent[b].push_back(a);
            }
        }
    return graph;
}

const LabeledVertex& vertex(const LHGraph& g1, const LHGraph& g2, Side side, std::size_t v)
{
    return side == Side::P ? g1.vertices[v] : g2.vertices[v];
}

class UnionFind
{
    public:
        explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

        std::size_t find(std::size_t a)
        {
            while (parent_[a] != a)
            {
                parent_[a] = parent_[parent_[a]];
                a = parent_[a];
            }
            return a;
        }

        void join(std::size_t a, std::size_t b)
        {
            a = find(a);
            b = find(b);
            if (a != b)
                parent_[std::max(a, b)] = std::min(a, b);
        }

    private:
        std::vector<std::size_t> parent_;
};

}   // namespace

std::optional<std::size_t> LHGraph::drop(std::size_t v, int label) const
{
    LabelSet keep = vertices[v].labels;
    keep.erase(std::remove(keep.begin(), keep.end(), label), keep.end());
    for (std::size_t u : adjacent[v])
    {
        if (std::includes(vertices[u].labels.begin(), vertices[u].labels.end(), keep.begin(), keep.end()))
            return u;
    }
    return std::nullopt;
}

std::pair<LHGraph, LHGraph> build_lh_graphs(const BimatrixGame& g, Execution exec)
{
    return {make_graph(g, Side::P, exec), make_graph(g, Side::Q, exec)};
}

std::string LHPath::label_trace(const LHGraph& g1, const LHGraph& g2) const
{
    std::string out;
    for (std::size_t k = 0; k < steps.size(); ++k)
    {
        if (k > 0)
            out += " -> ";
        out += "(" + to_string(g1.vertices[steps[k].v1].labels) + "|" + to_string(g2.vertices[steps[k].v2].labels) +
               ")";
    }
    return out;
}

LHPath lh_run(const LHGraph& g1, const LHGraph& g2, const BimatrixGame& g, int r)
{
    const int total = static_cast<int>(g.m() + g.n());
    if (r < 1 || r > total)
        throw std::out_of_range("lh_run: missing label must lie in 1.." + std::to_string(total));

    LHPath path;
    path.missing_label = r;
    std::size_t cur[2] = {LHGraph::artificial, LHGraph::artificial};
    path.steps.push_back(LHStep{cur[0], cur[1], std::nullopt});

    Side side = r <= static_cast<int>(g.m()) ? Side::P : Side::Q;
    int dropping = r;
    const std::size_t limit = g1.vertices.size() * g2.vertices.size() + 1;
    while (true)
    {
        if (path.steps.size() > limit)
            throw LpError("Lemke-Howson path exceeded " + std::to_string(limit) + " steps");

        const LHGraph& graph = side == Side::P ? g1 : g2;
        const std::size_t idx = side == Side::P ? 0 : 1;
        const auto next = graph.drop(cur[idx], dropping);
        if (!next)
            throw LpError("no neighbour when dropping label " + std::to_string(dropping));

        const LabelSet& before = graph.vertices[cur[idx]].labels;
        const LabelSet& after = graph.vertices[*next].labels;
        LabelSet picked;
        std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(picked));
        if (picked.size() != 1)
            throw LpError("pivot picked up " + std::to_string(picked.size()) + " labels");

        cur[idx] = *next;
        path.steps.push_back(LHStep{cur[0], cur[1], side});

        const Side other = side == Side::P ? Side::Q : Side::P;
        const std::size_t other_v = other == Side::P ? cur[0] : cur[1];
        if (picked.front() == r || !has_label(vertex(g1, g2, other, other_v).labels, picked.front()))
            break;
        dropping = picked.front();
        side = other;
    }

    if (cur[0] == LHGraph::artificial && cur[1] == LHGraph::artificial)
        path.terminal = ArtificialLoop{};
    else
        path.terminal = point_from_vertices(g, g1.vertices[cur[0]], g2.vertices[cur[1]]);
    return path;
}

LHPath lh_run(const BimatrixGame& g, int r)
{
    const auto [g1, g2] = build_lh_graphs(g);
    return lh_run(g1, g2, g, r);
}

Reachability reachability(const BimatrixGame& g, Execution exec)
{
    const auto [g1, g2] = build_lh_graphs(g, exec);
    Reachability out;
    const int total = static_cast<int>(g.m() + g.n());
    for (int r = 1; r <= total; ++r)
    {
        const LHPath path = lh_run(g1, g2, g, r);
        if (const auto* p = std::get_if<EquilibriumPoint>(&path.terminal))
            out.reached.emplace(r, *p);
    }
    for (auto& e : equilibria_by_labels(g, exec))
    {
        const bool hit = std::any_of(out.reached.begin(), out.reached.end(),
                                     [&](const auto& kv) { return kv.second.strategies == e.strategies; });
        if (!hit)
            out.unreached.push_back(std::move(e));
    }
    return out;
}

GPrimeReport gprime_components(const BimatrixGame& g, Execution exec)
{
    const auto [g1, g2] = build_lh_graphs(g, exec);
    const std::size_t total = g.m() + g.n();
    const std::size_t n1 = g1.vertices.size();
    const std::size_t n2 = g2.vertices.size();
    auto id = [n2](std::size_t a, std::size_t b) { return a * n2 + b; };

    std::vector<bool> almost(n1 * n2, false);
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b)
            almost[id(a, b)] = unite(g1.vertices[a].labels, g2.vertices[b].labels).size() + 1 >= total;

    UnionFind uf(n1 * n2);
    for (const auto& [a, b] : g1.edges)
    {
        const LabelSet shared = intersect(g1.vertices[a].labels, g1.vertices[b].labels);
        for (std::size_t v = 0; v < n2; ++v)
        {
            if (unite(shared, g2.vertices[v].labels).size() + 1 == total)
                uf.join(id(a, v), id(b, v));
        }
    }
    for (const auto& [a, b] : g2.edges)
    {
        const LabelSet shared = intersect(g2.vertices[a].labels, g2.vertices[b].labels);
        for (std::size_t v = 0; v < n1; ++v)
        {
            if (unite(g1.vertices[v].labels, shared).size() + 1 == total)
                uf.join(id(v, a), id(v, b));
        }
    }

    GPrimeReport report;
    std::vector<std::size_t> component_of_root(n1 * n2, static_cast<std::size_t>(-1));
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b)
        {
            if (!almost[id(a, b)])
                continue;
            std::size_t& c = component_of_root[uf.find(id(a, b))];
            if (c == static_cast<std::size_t>(-1))
                c = report.component_count++;
            report.nodes.push_back(GPrimeReport::Node{a, b, c});
        }
    report.artificial_component = component_of_root[uf.find(id(LHGraph::artificial, LHGraph::artificial))];

    for (const auto& node : report.nodes)
    {
        if (node.v1 == LHGraph::artificial && node.v2 == LHGraph::artificial)
            continue;
        if (unite(g1.vertices[node.v1].labels, g2.vertices[node.v2].labels).size() != total)
            continue;
        report.equilibria.push_back(GPrimeReport::Equilibrium{
            point_from_vertices(g, g1.vertices[node.v1], g2.vertices[node.v2]), node.v1, node.v2, node.component,
            node.component == report.artificial_component});
    }
    return report;
}

}   // namespace rank1
