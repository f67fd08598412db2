// rank1: command-line front end for the rank-1 equilibrium library.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rank1/errors.hpp"
#include "rank1/game_io.hpp"
#include "rank1/lemke_howson.hpp"
#include "rank1/oracle.hpp"
#include "rank1/parametric.hpp"
#include "rank1/polytope.hpp"

using namespace rank1;

namespace {

enum Exit { Ok = 0, Internal = 1, Degenerate = 2, Parse = 3, Precondition = 4 };

struct Options
{
    std::string file;
    bool json = false;
    bool trace = false;
    bool strict = false;
    bool serial = false;
    bool all = false;
    int r = 0;
    std::vector<std::string> factor;
    bool kt = false;
    std::size_t d = 0;
};

Execution exec_of(const Options& o)
{
    return o.serial ? Execution::Serial : Execution::Parallel;
}

RankOneFactorization parse_factor(const std::vector<std::string>& args)
{
    std::optional<RVector> b;
    std::optional<RVector> c;
    for (const auto& a : args)
    {
        if (a.rfind("b=", 0) == 0)
            b = parse_rational_list(a.substr(2));
        else if (a.rfind("c=", 0) == 0)
            c = parse_rational_list(a.substr(2));
        else
            throw ParseError("--factor expects b=<csv> c=<csv>, got '" + a + "'");
    }
    if (!b || !c)
        throw ParseError("--factor needs both b=<csv> and c=<csv>");
    return RankOneFactorization{*b, *c};
}

void print_list(std::ostream& out, const std::vector<EquilibriumPoint>& points)
{
    out << "equilibria: " << points.size() << "\n";
    for (const auto& p : points)
        out << format_equilibrium(p) << "\n";
}

std::string path_name(SweepPath p)
{
    switch (p)
    {
        case SweepPath::General:     return "general";
        case SweepPath::ZeroSum:     return "zero-sum";
        case SweepPath::RowConstant: return "row-constant";
    }
    return "?";
}

std::string describe_z(const ParametricTableau& t, const RVector& z)
{
    const RVector x(z.begin(), z.begin() + static_cast<long>(t.m));
    const RVector y(z.begin() + static_cast<long>(t.m), z.begin() + static_cast<long>(t.m + t.n));
    return "x=(" + to_string(x) + ") y=(" + to_string(y) + ") pi1=" + to_string(z[t.pi1_index()]) +
           " pi2=" + to_string(z[t.pi2_index()]);
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    const BimatrixGame g = read_game_file(o.file);
    EnumerateOptions eo;
    eo.exec = exec_of(o);
    if (!o.factor.empty())
    {
        const RankOneFactorization f = parse_factor(o.factor);
        eo.factorization = RankOneFactorization::checked(g, f.b, f.c);
    }
    const SweepTrace trace = enumerate_all(g, eo);

    if (o.json)
    {
        nlohmann::json j;
        j["path"] = path_name(trace.path);
        j["equilibria"] = to_json(trace.equilibria);
        if (o.trace)
        {
            j["trace"] = nlohmann::json::array();
            for (const auto& row : trace.table)
                j["trace"].push_back(to_json(row));
        }
        out << j.dump(2) << "\n";
        return Ok;
    }

    out << "path: " << path_name(trace.path) << "\n";
    print_list(out, trace.equilibria);
    if (o.trace && trace.path == SweepPath::General)
    {
        const RankOneFactorization f = eo.factorization ? *eo.factorization : factor_rank1(g);
        const ParametricTableau t = build_tableau(g, f);
        out << "factorization: b=(" << to_string(f.b) << ") c=(" << to_string(f.c) << ")\n";
        out << "trace:\n" << format_trace_table(trace);
        out << "intervals:\n";
        for (const auto& iv : trace.intervals)
        {
            out << "[" << to_string(iv.xi1) << ", " << to_string(iv.xi2) << "] basis " << to_string(iv.basis.rows)
                << " I=" << to_string(iv.basis.I(t)) << " J=" << to_string(iv.basis.J(t)) << "\n";
            out << "  at " << to_string(iv.xi1) << ": " << describe_z(t, iv.point(iv.xi1)) << "\n";
            out << "  at " << to_string(iv.xi2) << ": " << describe_z(t, iv.point(iv.xi2)) << "\n";
        }
        out << "breakpoints:\n";
        for (const auto& bp : trace.breakpoints)
        {
            out << "xi=" << to_string(bp.xi) << " " << to_string(bp.kind) << " leaving " << bp.leaving
                << " entering " << bp.entering << " pivots " << bp.pivots.size() << "\n";
        }
    }
    return Ok;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err)
{
    const BimatrixGame g = read_game_file(o.file);
    const OracleResult r = support_enumeration(g, OracleOptions{o.strict, exec_of(o)});
    if (r.degenerate_suspect)
        err << "warning: degenerate game suspected; the list may be incomplete\n";
    if (o.json)
        out << to_json(r.equilibria).dump(2) << "\n";
    else
        print_list(out, r.equilibria);
    return Ok;
}

int cmd_labels(const Options& o, std::ostream& out)
{
    const BimatrixGame g = read_game_file(o.file);
    const auto points = equilibria_by_labels(g, exec_of(o));
    if (o.json)
        out << to_json(points).dump(2) << "\n";
    else
        print_list(out, points);
    return Ok;
}

void print_path(std::ostream& out, const LHPath& path, const LHGraph& g1, const LHGraph& g2)
{
    out << "r=" << path.missing_label << ": " << path.label_trace(g1, g2) << "\n";
    if (const auto* p = std::get_if<EquilibriumPoint>(&path.terminal))
        out << "  terminal " << format_equilibrium(*p) << "\n";
    else
        out << "  terminal artificial\n";
}

int cmd_lh(const Options& o, std::ostream& out)
{
    const BimatrixGame g = read_game_file(o.file);
    if (!o.all && o.r == 0)
        throw PreconditionError("lh needs --r <k> or --all");
    const auto [g1, g2] = build_lh_graphs(g, exec_of(o));
    if (!o.all)
    {
        print_path(out, lh_run(g1, g2, g, o.r), g1, g2);
        return Ok;
    }

    const int total = static_cast<int>(g.m() + g.n());
    for (int r = 1; r <= total; ++r)
        print_path(out, lh_run(g1, g2, g, r), g1, g2);
    const Reachability reach = reachability(g, exec_of(o));
    std::vector<EquilibriumPoint> reached;
    for (const auto& [r, p] : reach.reached)
    {
        (void)r;
        reached.push_back(p);
    }
    reached = canonical_set(std::move(reached));
    out << "reached: " << reached.size() << "\n";
    for (const auto& p : reached)
        out << format_equilibrium(p) << "\n";
    out << "unreached: " << reach.unreached.size() << "\n";
    for (const auto& p : reach.unreached)
        out << format_equilibrium(p) << "\n";
    return Ok;
}

int cmd_gprime(const Options& o, std::ostream& out)
{
    const BimatrixGame g = read_game_file(o.file);
    const GPrimeReport rep = gprime_components(g, exec_of(o));
    out << "components: " << rep.component_count << "\n";
    out << "artificial component: " << rep.artificial_component << "\n";
    for (const auto& e : rep.equilibria)
    {
        out << format_equilibrium(e.point) << " component " << e.component
            << (e.with_artificial ? " with-artificial" : " separate") << "\n";
    }
    out << "equilibria outside the artificial component: "
        << std::count_if(rep.equilibria.begin(), rep.equilibria.end(), [](const auto& e) { return !e.with_artificial; })
        << "\n";
    return Ok;
}

int cmd_rank(const Options& o, std::ostream& out)
{
    out << "rank " << game_rank(read_game_file(o.file)) << "\n";
    return Ok;
}

int cmd_reduce_rank(const Options& o, std::ostream& out)
{
    const BimatrixGame g = read_game_file(o.file);
    const RankReductionStep step = rank_reduction_step(g);
    const BimatrixGame h = reduce_rank(g);
    out << "# added " << to_string(step.lambda) << " to column " << step.column + 1 << " of A; rank "
        << game_rank(g) << " -> " << game_rank(h) << "\n";
    out << format_game(h);
    return Ok;
}

int cmd_check(const Options& o, std::ostream& out)
{
    const DegeneracyReport rep = check_nondegenerate(read_game_file(o.file), exec_of(o));
    if (rep.nondegenerate)
    {
        out << "non-degenerate\n";
        return Ok;
    }
    out << "degenerate: " << rep.describe() << "\n";
    return Degenerate;
}

int cmd_generate(const Options& o, std::ostream& out)
{
    if (!o.kt)
        throw PreconditionError("generate supports only --kt");
    if (o.d == 0)
        throw PreconditionError("--d must be positive");
    out << format_game(generate_kt(o.d));
    return Ok;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Nash equilibrium enumeration for rank-1 bimatrix games"};
    app.require_subcommand(1);
    Options o;

    auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "game file")->required(); };
    auto add_serial = [&](CLI::App* sub) { sub->add_flag("--serial", o.serial, "use the serial reference kernels"); };

    auto* enumerate = app.add_subcommand("enumerate", "parametric sweep over xi");
    add_file(enumerate);
    add_serial(enumerate);
    enumerate->add_flag("--trace", o.trace, "print the sweep table, intervals and breakpoints");
    enumerate->add_flag("--json", o.json, "JSON output");
    enumerate->add_option("--factor", o.factor, "factorization override: b=<csv> c=<csv>")->expected(2);

    auto* oracle = app.add_subcommand("oracle", "support enumeration");
    add_file(oracle);
    add_serial(oracle);
    oracle->add_flag("--strict", o.strict, "search all support pairs, not only equal sizes");
    oracle->add_flag("--json", o.json, "JSON output");

    auto* labels = app.add_subcommand("labels", "completely labeled vertex pairs");
    add_file(labels);
    add_serial(labels);
    labels->add_flag("--json", o.json, "JSON output");

    auto* lh = app.add_subcommand("lh", "Lemke-Howson paths");
    add_file(lh);
    add_serial(lh);
    auto* r_opt = lh->add_option("--r", o.r, "missing label");
    auto* all_opt = lh->add_flag("--all", o.all, "every missing label, plus the unreached set");
    r_opt->excludes(all_opt);

    auto* gprime = app.add_subcommand("gprime", "components of the union graph G'");
    add_file(gprime);
    add_serial(gprime);

    auto* rank = app.add_subcommand("rank", "rank of A + B");
    add_file(rank);

    auto* reduce = app.add_subcommand("reduce-rank", "lower rank(A + B) of a square full-rank game by one");
    add_file(reduce);

    auto* check = app.add_subcommand("check", "non-degeneracy test");
    add_file(check);
    add_serial(check);

    auto* generate = app.add_subcommand("generate", "write a generated game");
    generate->add_flag("--kt", o.kt, "the d x d rank-1 family with 2d-1 equilibria");
    generate->add_option("--d", o.d, "dimension")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? Ok : Internal;
    }

    std::ostringstream out;
    int code = Ok;
    try
    {
        if (*enumerate)
            code = cmd_enumerate(o, out);
        else if (*oracle)
            code = cmd_oracle(o, out, std::cerr);
        else if (*labels)
            code = cmd_labels(o, out);
        else if (*lh)
            code = cmd_lh(o, out);
        else if (*gprime)
            code = cmd_gprime(o, out);
        else if (*rank)
            code = cmd_rank(o, out);
        else if (*reduce)
            code = cmd_reduce_rank(o, out);
        else if (*check)
            code = cmd_check(o, out);
        else if (*generate)
            code = cmd_generate(o, out);
    }
    catch (const DegenerateGameError& e)
    {
        std::cerr << "error: " << e.what();
        if (!e.witness().empty())
            std::cerr << ": " << e.witness();
        std::cerr << "\n";
        return Degenerate;
    }
    catch (const StalledError& e)
    {
        std::cerr << "error: pivoting stalled (degenerate input?): " << e.what() << "\n";
        return Degenerate;
    }
    catch (const ParseError& e)
    {
        std::cerr << "parse error: " << e.what() << "\n";
        return Parse;
    }
    catch (const PreconditionError& e)
    {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return Precondition;
    }
    catch (const std::out_of_range& e)
    {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return Precondition;
    }
    catch (const std::exception& e)
    {
        std::cerr << "internal error: " << e.what() << "\n";
        return Internal;
    }
    std::cout << out.str();
    return code;
}
