#include "rank1/polytope.hpp"

#include <map>
#include <sstream>

#include "rank1/errors.hpp"

namespace rank1 {

std::string to_string(const LabelSet& labels)
{
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i)
    {
        if (i > 0)
            out += ",";
        out += std::to_string(labels[i]);
    }
    return out + "}";
}

LabeledPolyhedron build_polyhedron(const BimatrixGame& g, Side which)
{
    const std::size_t m = g.m();
    const std::size_t n = g.n();
    const std::size_t dim = (which == Side::P ? m : n) + 1;
    LabeledPolyhedron p{which, m, n, RMatrix(m + n, dim), RVector(dim)};

    if (which == Side::P)
    {
        for (std::size_t i = 0; i < m; ++i)
            p.inequalities(i, i) = -1;
        for (std::size_t j = 0; j < n; ++j)
        {
            for (std::size_t i = 0; i < m; ++i)
                p.inequalities(m + j, i) = g.B()(i, j);
            p.inequalities(m + j, m) = -1;
        }
    }
    else
    {
        for (std::size_t i = 0; i < m; ++i)
        {
            for (std::size_t j = 0; j < n; ++j)
                p.inequalities(i, j) = g.A()(i, j);
            p.inequalities(i, n) = -1;
        }
        for (std::size_t j = 0; j < n; ++j)
            p.inequalities(m + j, j) = -1;
    }
    for (std::size_t k = 0; k + 1 < dim; ++k)
        p.equality[k] = 1;
    return p;
}

LabelSet binding_labels(const LabeledPolyhedron& p, const RVector& point)
{
    LabelSet labels;
    for (std::size_t k = 0; k < p.label_count(); ++k)
    {
        if (dot(p.inequalities.row(k), point) == 0)
            labels.push_back(static_cast<int>(k + 1));
    }
    return labels;
}

bool contains(const LabeledPolyhedron& p, const RVector& point)
{
    if (point.size() != p.ambient_dim() || dot(p.equality, point) != 1)
        return false;
    for (std::size_t k = 0; k < p.label_count(); ++k)
    {
        if (dot(p.inequalities.row(k), point) > 0)
            return false;
    }
    return true;
}

namespace {

std::optional<LabeledVertex> vertex_for_basis(const LabeledPolyhedron& p, const std::vector<std::size_t>& basis)
{
    const std::size_t dim = p.ambient_dim();
    RMatrix sys(dim, dim);
    RVector rhs(dim);
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c)
            sys(r, c) = p.inequalities(basis[r], c);
    for (std::size_t c = 0; c < dim; ++c)
        sys(dim - 1, c) = p.equality[c];
    rhs[dim - 1] = 1;

    RVector point;
    try
    {
        point = solve_square(sys, rhs);
    }
    catch (const SingularMatrixError&)
    {
        return std::nullopt;
    }
    if (!contains(p, point))
        return std::nullopt;
    LabeledVertex v{std::move(point), {}};
    v.labels = binding_labels(p, v.point);
    return v;
}

}   // namespace

std::vector<LabeledVertex> enumerate_vertices(const LabeledPolyhedron& p, Execution exec)
{
    const auto bases = combinations(p.label_count(), p.strategy_dim());
    std::vector<std::optional<LabeledVertex>> found(bases.size());

    if (exec == Execution::Parallel)
    {
        const long count = static_cast<long>(bases.size());
        #pragma omp parallel for schedule(dynamic, 8)
        for (long k = 0; k < count; ++k)
            found[k] = vertex_for_basis(p, bases[k]);
    }
    else
    {
        for (std::size_t k = 0; k < bases.size(); ++k)
            found[k] = vertex_for_basis(p, bases[k]);
    }

    // Several bases describe the same point when it carries extra labels.
    std::vector<LabeledVertex> vertices;
    std::map<RVector, std::size_t> seen;
    for (auto& v : found)
    {
        if (!v)
            continue;
        if (seen.emplace(v->point, vertices.size()).second)
            vertices.push_back(std::move(*v));
    }
    return vertices;
}

std::string DegeneracyReport::describe() const
{
    if (nondegenerate || !witness)
        return "non-degenerate";
    std::ostringstream os;
    os << (witness_side == Side::P ? "P" : "Q") << "-vertex (" << to_string(witness->point)
       << ") has labels " << to_string(witness->labels);
    return os.str();
}

DegeneracyReport check_nondegenerate(const BimatrixGame& g, Execution exec)
{
    DegeneracyReport report;
    for (Side side : {Side::P, Side::Q})
    {
        const auto p = build_polyhedron(g, side);
        for (const auto& v : enumerate_vertices(p, exec))
        {
            if (v.labels.size() != p.strategy_dim())
            {
                report.nondegenerate = false;
                report.witness_side = side;
                report.witness = v;
                return report;
            }
        }
    }
    return report;
}

EquilibriumPoint point_from_vertices(const BimatrixGame& g, const LabeledVertex& p_vertex,
                                     const LabeledVertex& q_vertex)
{
    const std::size_t m = g.m();
    const std::size_t n = g.n();
    MixedStrategyPair s{RVector(p_vertex.point.begin(), p_vertex.point.begin() + static_cast<long>(m)),
                        RVector(q_vertex.point.begin(), q_vertex.point.begin() + static_cast<long>(n))};
    return EquilibriumPoint{std::move(s), q_vertex.point[n], p_vertex.point[m], std::nullopt};
}

namespace {

bool completely_labeled(const LabelSet& a, const LabelSet& b, std::size_t total)
{
    std::vector<bool> hit(total + 1, false);
    for (int l : a)
        hit[static_cast<std::size_t>(l)] = true;
    for (int l : b)
        hit[static_cast<std::size_t>(l)] = true;
    for (std::size_t l = 1; l <= total; ++l)
    {
        if (!hit[l])
            return false;
    }
    return true;
}

}   // namespace

std::vector<EquilibriumPoint> equilibria_by_labels(const BimatrixGame& g, Execution exec)
{
    const auto p = build_polyhedron(g, Side::P);
    const auto q = build_polyhedron(g, Side::Q);
    const auto pv = enumerate_vertices(p, exec);
    const auto qv = enumerate_vertices(q, exec);

    for (const auto& v : pv)
    {
        if (v.labels.size() != g.m())
        {
            DegeneracyReport r{false, Side::P, v};
            throw DegenerateGameError("degenerate game", r.describe());
        }
    }
    for (const auto& v : qv)
    {
        if (v.labels.size() != g.n())
        {
            DegeneracyReport r{false, Side::Q, v};
            throw DegenerateGameError("degenerate game", r.describe());
        }
    }

    std::vector<EquilibriumPoint> out;
    for (const auto& a : pv)
        for (const auto& b : qv)
        {
            if (completely_labeled(a.labels, b.labels, g.m() + g.n()))
                out.push_back(point_from_vertices(g, a, b));
        }
    return out;
}

}   // namespace rank1
