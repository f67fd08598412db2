// Acceptance gate: one PASS/FAIL line per criterion. With an argument only
// that criterion runs. Exit status is 0 iff every selected criterion passed.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rank1/errors.hpp"
#include "rank1/lemke_howson.hpp"
#include "rank1/oracle.hpp"
#include "rank1/parametric.hpp"
#include "rank1/polytope.hpp"
#include "test_support.hpp"

using namespace rank1;
using namespace rank1::testing;

namespace {

struct Outcome
{
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what)
    {
        if (!ok)
        {
            pass = false;
            details.push_back("failed: " + what);
        }
    }
    void note(const std::string& what) { details.push_back(what); }
};

struct Criterion
{
    std::string id;
    std::string title;
    double limit_seconds;   // 0 means no time limit
    std::function<void(Outcome&)> run;
};

struct CliResult
{
    int exit_code;
    std::string out;
};

CliResult cli(const std::string& args)
{
    const std::string cmd = std::string(RANK1_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string corpus(const std::string& name)
{
    return std::string(RANK1_CORPUS_DIR) + "/" + name;
}

std::set<std::pair<Rational, Rational>> payoffs_of(const std::vector<EquilibriumPoint>& points)
{
    std::set<std::pair<Rational, Rational>> out;
    for (const auto& p : points)
        out.emplace(p.payoff1, p.payoff2);
    return out;
}

std::vector<MixedStrategyPair> oracle_set(const BimatrixGame& g)
{
    return strategies_of(support_enumeration(g).equilibria);
}

std::string describe(const MixedStrategyPair& s)
{
    return "x=(" + to_string(s.x) + ") y=(" + to_string(s.y) + ")";
}

// Criterion 1: the 2x3 example game, which is not of rank 1.
void example_2x3(Outcome& o)
{
    const auto g = example_2x3_game();
    const std::vector<MixedStrategyPair> expected{
        pair({q(2, 5), q(3, 5)}, {q(1, 2), 0, q(1, 2)}),
        pair({q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2), 0}),
        pair({1, 0}, {0, 1, 0}),
    };
    o.require(game_rank(g) == 2, "rank(A + B) is 2");
    o.require(oracle_set(g) == expected, "oracle reports exactly the three equilibria");
    o.require(strategies_of(equilibria_by_labels(g)) == expected, "labels reports exactly the three equilibria");
    o.require(cli("enumerate " + corpus("example-2x3.game")).exit_code == 4, "enumerate refuses the game (exit 4)");
}

// Criterion 2: the rank-1 game with an unreachable mixed equilibrium.
void unreachable_mixed(Outcome& o)
{
    const auto g = unreachable_mixed_game();
    const std::set<std::pair<Rational, Rational>> payoffs{{-18, 30}, {-8, 20}, {-20, 18}};
    const auto swept = enumerate_all(g).equilibria;
    const auto oracle = support_enumeration(g).equilibria;
    const auto labels = equilibria_by_labels(g);
    o.require(swept.size() == 3 && payoffs_of(swept) == payoffs, "enumerate payoffs");
    o.require(oracle.size() == 3 && payoffs_of(oracle) == payoffs, "oracle payoffs");
    o.require(labels.size() == 3 && payoffs_of(labels) == payoffs, "labels payoffs");

    const auto mixed = pair({q(1, 5), q(4, 5)}, {q(1, 5), q(4, 5)});
    const std::set<std::pair<Rational, Rational>> reachable{{-18, 30}, {-8, 20}};
    const auto reach = reachability(g);
    for (int r = 1; r <= 4; ++r)
    {
        const auto it = reach.reached.find(r);
        o.require(it != reach.reached.end() && reachable.count({it->second.payoff1, it->second.payoff2}) == 1,
                  "r = " + std::to_string(r) + " ends at a pure equilibrium");
    }
    o.require(reach.unreached.size() == 1 && reach.unreached[0].strategies == mixed,
              "((1/5,4/5),(1/5,4/5)) is the only unreached equilibrium");

    const auto [g1, g2] = build_lh_graphs(g);
    const auto trace = lh_run(g1, g2, g, 1).label_trace(g1, g2);
    o.note("r = 1: " + trace);
    o.require(trace == "({1,2}|{3,4}) -> ({2,4}|{3,4}) -> ({2,4}|{1,3})", "r = 1 label trace");

    const auto out = cli("lh " + corpus("unreachable-mixed.game") + " --all").out;
    o.require(out.find("reached: 2") != std::string::npos && out.find("unreached: 1") != std::string::npos,
              "lh --all summary");
}

// Criterion 3: the sweep table for the 2x2 game with b = c = (2, 4).
void sweep_table(Outcome& o)
{
    EnumerateOptions opts;
    opts.factorization = RankOneFactorization{{2, 4}, {2, 4}};
    const auto trace = enumerate_all(generate_kt(2), opts);

    struct Row
    {
        Rational xi1, xi2;
        bool is_point;
        Rational objective;
        LabelSet binding;
    };
    const std::vector<Row> expected{
        {2, 2, true, 0, {2, 3, 5, 8}},
        {2, q(5, 2), false, q(-1, 8), {2, 3, 5}},
        {q(5, 2), q(5, 2), true, q(-1, 4), {2, 3, 4, 5}},
        {q(5, 2), 3, false, q(-1, 8), {3, 4, 5}},
        {3, 3, true, 0, {3, 4, 5, 6}},
        {3, q(7, 2), false, q(-1, 8), {3, 4, 6}},
        {q(7, 2), q(7, 2), true, q(-1, 4), {1, 3, 4, 6}},
        {q(7, 2), 4, false, q(-1, 8), {1, 4, 6}},
        {4, 4, true, 0, {1, 4, 6, 7}},
    };
    bool table_ok = trace.table.size() == expected.size();
    for (std::size_t k = 0; table_ok && k < expected.size(); ++k)
    {
        const auto& a = trace.table[k];
        const auto& e = expected[k];
        table_ok = a.xi1 == e.xi1 && a.xi2 == e.xi2 && a.is_point == e.is_point && a.objective == e.objective &&
                   a.binding == e.binding;
    }
    o.require(table_ok, "table rows (xi, objective, binding set)");
    o.note(std::to_string(trace.table.size()) + " table rows");

    std::vector<Rational> breakpoints;
    for (const auto& b : trace.breakpoints)
        breakpoints.push_back(b.xi);
    o.require(breakpoints == std::vector<Rational>{q(5, 2), 3, q(7, 2)}, "interior breakpoints 5/2, 3, 7/2");

    const auto t = build_tableau(generate_kt(2), *opts.factorization);
    const Rational half = q(5, 2);
    int optimal_at_half = 0;
    for (const auto& iv : trace.intervals)
    {
        if (iv.xi1 > half || iv.xi2 < half)
            continue;
        ++optimal_at_half;
        const RVector z = iv.point(half);
        o.require(z[t.y_offset()] == q(3, 4) && z[t.y_offset() + 1] == q(1, 4), "y = (3/4,1/4) at 5/2");
        o.require(z[t.pi1_index()] == q(13, 4), "pi1 = 13/4 at 5/2");
        const std::pair<Rational, Rational> x1_pi2{z[t.x_offset()], z[t.pi2_index()]};
        if (iv.basis.rows == std::vector<int>{2, 3, 5})
            o.require(x1_pi2 == std::pair<Rational, Rational>{1, 2}, "basis {2,3,5} gives point (1, 2)");
        else if (iv.basis.rows == std::vector<int>{3, 4, 5})
            o.require(x1_pi2 == std::pair<Rational, Rational>{q(1, 2), q(9, 2)},
                      "basis {3,4,5} gives point (1/2, 9/2)");
        else
            o.require(false, "unexpected optimal basis at 5/2");
    }
    o.require(optimal_at_half == 2, "two optimal bases at 5/2");
}

// Criterion 4: many equilibria in the generated d x d games.
void kt_scaling(Outcome& o)
{
    for (std::size_t d = 1; d <= 5; ++d)
    {
        const auto g = generate_kt(d);
        const auto swept = enumerate_all(g).equilibria;
        const auto oracle = support_enumeration(g).equilibria;
        o.note("d = " + std::to_string(d) + ": " + std::to_string(swept.size()) + " equilibria");
        o.require(swept.size() >= 2 * d - 1, "at least 2d-1 equilibria for d = " + std::to_string(d));
        o.require(same_strategy_set(swept, oracle), "sweep equals oracle for d = " + std::to_string(d));
    }
}

// Criterion 5: a mixed equilibrium of Wilson's game lies outside the artificial component of G'.
void wilson(Outcome& o)
{
    const auto rep = gprime_components(wilson_game());
    o.note(std::to_string(rep.component_count) + " components");
    bool separate_mixed = false;
    for (const auto& e : rep.equilibria)
    {
        const auto& x = e.point.strategies.x;
        const bool pure = std::count(x.begin(), x.end(), Rational(0)) == static_cast<long>(x.size()) - 1;
        o.note(describe(e.point.strategies) + (e.with_artificial ? " with-artificial" : " separate"));
        o.require(e.with_artificial == (e.component == rep.artificial_component), "component flag consistency");
        if (!pure && !e.with_artificial)
            separate_mixed = true;
    }
    o.require(separate_mixed, "some mixed equilibrium is outside the artificial component");
}

// Criterion 6: sweep, oracle and label enumeration agree on random rank-1 games.
void oracle_equivalence(Outcome& o)
{
    std::mt19937 rng(20240601);
    int compared = 0;
    int skipped = 0;
    int mismatches = 0;
    while (compared < 120)
    {
        const std::size_t m = 2 + rng() % 4;
        const std::size_t n = 2 + rng() % 4;
        const auto g = random_rank1_game(rng, m, n);
        std::vector<EquilibriumPoint> swept;
        try
        {
            swept = enumerate_all(g).equilibria;
        }
        catch (const DegenerateGameError&)
        {
            ++skipped;
            continue;
        }
        ++compared;
        const auto oracle = support_enumeration(g).equilibria;
        const auto labels = equilibria_by_labels(g);
        if (!same_strategy_set(swept, oracle) || !same_strategy_set(swept, labels))
        {
            ++mismatches;
            o.note("mismatch on a " + std::to_string(m) + "x" + std::to_string(n) + " game");
        }
    }
    o.note(std::to_string(compared) + " games compared, " + std::to_string(skipped) + " degenerate draws skipped, " +
           std::to_string(mismatches) + " mismatches");
    o.require(mismatches == 0, "no mismatches");
}

std::vector<BimatrixGame> nondegenerate_games(std::mt19937& rng, std::size_t count, std::size_t lo, std::size_t hi)
{
    std::vector<BimatrixGame> out;
    while (out.size() < count)
    {
        const std::size_t m = lo + rng() % (hi - lo + 1);
        const std::size_t n = lo + rng() % (hi - lo + 1);
        BimatrixGame g(random_matrix(rng, m, n), random_matrix(rng, m, n));
        if (check_nondegenerate(g).nondegenerate)
            out.push_back(std::move(g));
    }
    return out;
}

// Criterion 7: operations that are claimed to keep the equilibrium set.
void invariance(Outcome& o)
{
    std::mt19937 rng(7);
    const auto games = nondegenerate_games(rng, 20, 2, 4);
    std::uniform_int_distribution<int> shift(-9, 9);
    std::uniform_int_distribution<int> scale(2, 5);

    int additive_fail = 0;
    std::array<int, 2> scaling_fail{0, 0};
    std::string scaling_example;
    for (const auto& g : games)
    {
        const auto base = oracle_set(g);
        const std::size_t j = rng() % g.n();
        const std::size_t i = rng() % g.m();
        if (oracle_set(transform(g, AddToColumnOfA{j, shift(rng)})) != base)
            ++additive_fail;
        if (oracle_set(transform(g, AddToRowOfB{i, shift(rng)})) != base)
            ++additive_fail;
        const std::array<GameTransform, 2> scalings{ScaleColumnOfA{j, scale(rng)}, ScaleRowOfB{i, scale(rng)}};
        for (std::size_t k = 0; k < scalings.size(); ++k)
        {
            const auto after = oracle_set(transform(g, scalings[k]));
            if (after == base)
                continue;
            ++scaling_fail[k];
            if (scaling_example.empty())
            {
                std::vector<MixedStrategyPair> lost;
                std::set_difference(base.begin(), base.end(), after.begin(), after.end(), std::back_inserter(lost));
                if (!lost.empty())
                    scaling_example = describe(lost.front());
            }
        }
    }
    o.note("additive shifts: " + std::to_string(additive_fail) + " of " + std::to_string(2 * games.size()) +
           " changed the set");
    o.require(additive_fail == 0, "adding constants to a column of A or a row of B");
    o.note("ScaleColumnOfA: " + std::to_string(scaling_fail[0]) + " of " + std::to_string(games.size()) +
           " changed the set");
    o.note("ScaleRowOfB: " + std::to_string(scaling_fail[1]) + " of " + std::to_string(games.size()) +
           " changed the set");
    if (!scaling_example.empty())
        o.note("e.g. equilibrium " + scaling_example + " is lost after scaling; mixed strategies are renormalized");
    o.require(scaling_fail[0] == 0, "positive scaling of a column of A");
    o.require(scaling_fail[1] == 0, "positive scaling of a row of B");

    int reduced = 0;
    int reduce_fail = 0;
    while (reduced < 20)
    {
        BimatrixGame g(random_matrix(rng, 3, 3), random_matrix(rng, 3, 3));
        if (game_rank(g) != 3 || !check_nondegenerate(g).nondegenerate)
            continue;
        ++reduced;
        const auto r = reduce_rank(g);
        if (game_rank(r) != 2 || oracle_set(r) != oracle_set(g))
            ++reduce_fail;
    }
    o.note("reduce_rank: " + std::to_string(reduce_fail) + " of 20 failed");
    o.require(reduce_fail == 0, "reduce_rank on full-rank 3x3 games");

    int row_constant = 0;
    int row_fail = 0;
    while (row_constant < 20)
    {
        const std::size_t m = 2 + rng() % 3;
        const std::size_t n = 2 + rng() % 3;
        const auto g = random_row_constant_game(rng, m, n);
        const auto special = classify_special(g);
        const auto* cls = std::get_if<RowConstant>(&special);
        if (!cls || !check_nondegenerate(g).nondegenerate)
            continue;
        ++row_constant;
        const auto z = reduce_row_constant(g, cls->u);
        if (!std::holds_alternative<ZeroSum>(classify_special(z)) || oracle_set(z) != oracle_set(g) ||
            strategies_of(enumerate_all(g).equilibria) != oracle_set(g))
            ++row_fail;
    }
    o.note("reduce_row_constant: " + std::to_string(row_fail) + " of 20 failed");
    o.require(row_fail == 0, "reduce_row_constant on row-constant games");

    int rescale_fail = 0;
    std::vector<BimatrixGame> rank1{unreachable_mixed_game(), generate_kt(3)};
    while (rank1.size() < 10)
    {
        auto g = random_rank1_game(rng, 2 + rng() % 3, 2 + rng() % 3);
        if (std::holds_alternative<General>(classify_special(g)) && check_nondegenerate(g).nondegenerate)
            rank1.push_back(std::move(g));
    }
    for (const auto& g : rank1)
    {
        const auto base = oracle_set(g);
        for (const Rational t : {q(3), q(-1, 2), q(7, 5)})
        {
            EnumerateOptions opts;
            opts.factorization = factor_rank1(g).rescaled(t);
            if (strategies_of(enumerate_all(g, opts).equilibria) != base)
                ++rescale_fail;
        }
    }
    o.note("factorization rescalings t = 3, -1/2, 7/5: " + std::to_string(rescale_fail) + " of " +
           std::to_string(3 * rank1.size()) + " failed");
    o.require(rescale_fail == 0, "factorization rescalings");
}

// Criterion 8: shape of the sweep and the zero-sum dual identification.
void structural(Outcome& o)
{
    std::mt19937 rng(88);
    std::vector<BimatrixGame> games{generate_kt(4), unreachable_mixed_game()};
    while (games.size() < 22)
    {
        auto g = random_rank1_game(rng, 2 + rng() % 4, 2 + rng() % 4);
        if (std::holds_alternative<General>(classify_special(g)) && check_nondegenerate(g).nondegenerate)
            games.push_back(std::move(g));
    }
    int tiling_fail = 0;
    int sign_fail = 0;
    int count_fail = 0;
    std::size_t most_intervals = 0;
    for (const auto& g : games)
    {
        const auto f = factor_rank1(g);
        const auto [lo, hi] = xi_range(f);
        const auto trace = enumerate_all(g);
        const auto& ivs = trace.intervals;
        bool tiled = !ivs.empty() && ivs.front().xi1 == lo && ivs.back().xi2 == hi;
        for (std::size_t k = 0; tiled && k < ivs.size(); ++k)
            tiled = ivs[k].xi1 < ivs[k].xi2 && (k == 0 || ivs[k - 1].xi2 == ivs[k].xi1);
        tiling_fail += !tiled;
        for (const auto& iv : ivs)
            for (const Rational xi : {iv.xi1, iv.xi2, (iv.xi1 + iv.xi2) / 2, (3 * iv.xi1 + iv.xi2) / 4})
                if (iv.objective(xi) > 0)
                    ++sign_fail;
        const std::size_t f0p = enumerate_vertices(build_polyhedron(g, Side::P)).size();
        const std::size_t f0q = enumerate_vertices(build_polyhedron(g, Side::Q)).size();
        count_fail += ivs.size() > f0p * f0q;
        most_intervals = std::max(most_intervals, ivs.size());
    }
    o.note(std::to_string(games.size()) + " games, at most " + std::to_string(most_intervals) + " intervals");
    o.require(tiling_fail == 0, "intervals tile [xi_min, xi_max]");
    o.require(sign_fail == 0, "objective is nonpositive at sampled xi");
    o.require(count_fail == 0, "interval count is at most f0(P) f0(Q)");

    int zero_sum = 0;
    int coincide_fail = 0;
    while (zero_sum < 10)
    {
        const std::size_t m = 2 + rng() % 3;
        const std::size_t n = 2 + rng() % 3;
        const auto g = random_zero_sum_game(rng, m, n);
        if (!check_nondegenerate(g).nondegenerate)
            continue;
        ++zero_sum;
        const auto t = build_tableau(g, {RVector(m), RVector(n)});
        const RMatrix dual = dual_constraint_matrix(t);
        const std::size_t K = t.K();
        std::vector<std::size_t> as_u(t.N());
        for (std::size_t i = 0; i < m; ++i)
            as_u[t.x_offset() + i] = m + n + i;
        for (std::size_t j = 0; j < n; ++j)
            as_u[t.y_offset() + j] = m + j;
        as_u[t.pi1_index()] = K;
        as_u[t.pi2_index()] = K + 1;

        bool ok = true;
        auto check_row = [&](std::size_t dual_row, std::size_t primal_row, std::size_t slack) {
            for (std::size_t v = 0; v < t.N(); ++v)
                ok = ok && dual(dual_row, as_u[v]) == -t.m1(primal_row, v);
            ok = ok && dual(dual_row, slack) == -1;
        };
        for (std::size_t i = 0; i < m; ++i)
            check_row(t.x_offset() + i, m + n + i, i);
        for (std::size_t j = 0; j < n; ++j)
            check_row(t.y_offset() + j, m + j, 2 * m + n + j);
        const auto swept = enumerate_all(g).equilibria;
        ok = ok && swept.size() == 1 && same_strategy_set(swept, support_enumeration(g).equilibria);
        coincide_fail += !ok;
    }
    o.require(coincide_fail == 0, "zero-sum dual rows coincide with primal rows on 10 games");
}

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {"example-2x3", "2x3 example: oracle and labels give the three equilibria", 1, example_2x3},
        {"unreachable-mixed", "rank-1 example: enumeration and Lemke-Howson reachability", 1, unreachable_mixed},
        {"sweep-table", "sweep table for b = c = (2,4)", 1, sweep_table},
        {"kt", "generated d x d games have at least 2d-1 equilibria", 30, kt_scaling},
        {"wilson", "Wilson's game: mixed equilibrium outside the artificial component", 5, wilson},
        {"oracle", "sweep = oracle = labels on random rank-1 games", 60, oracle_equivalence},
        {"invariance", "equilibrium-preserving operations", 0, invariance},
        {"structural", "tiling, objective sign, interval count, zero-sum rows", 0, structural},
    };
    return all;
}

}   // namespace

int main(int argc, char** argv)
{
    const std::string only = argc > 1 ? argv[1] : "";
    bool all_pass = true;
    bool any = false;
    for (const auto& c : criteria())
    {
        if (!only.empty() && c.id != only)
            continue;
        any = true;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try
        {
            c.run(o);
        }
        catch (const std::exception& e)
        {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds)
            o.require(false, "time limit");
        std::ostringstream timing;
        timing.precision(3);
        timing << std::fixed << seconds << " s";
        if (c.limit_seconds > 0)
            timing << " (limit " << c.limit_seconds << " s)";
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << ": " << c.title << " [" << timing.str() << "]\n";
        for (const auto& d : o.details)
            std::cout << "    " << d << "\n";
        all_pass = all_pass && o.pass;
    }
    if (!any)
    {
        std::cerr << "unknown criterion: " << only << "\n";
        return 1;
    }
    return all_pass ? 0 : 1;
}
