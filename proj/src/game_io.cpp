#include "rank1/game_io.hpp"

#include <fstream>
#include <sstream>

#include "rank1/errors.hpp"

namespace rank1 {

namespace {

/** Whitespace-separated tokens with comments stripped, tagged by line number. */
struct Token
{
    std::string text;
    std::size_t line;
};

std::vector<Token> tokenize(std::istream& in)
{
    std::vector<Token> tokens;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line))
    {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        while (ls >> word)
            tokens.push_back(Token{word, number});
    }
    return tokens;
}

std::size_t parse_dimension(const Token& t)
{
    std::size_t used = 0;
    long v = 0;
    try
    {
        v = std::stol(t.text, &used);
    }
    catch (const std::exception&)
    {
        used = 0;
    }
    if (used != t.text.size() || v <= 0)
        throw ParseError("line " + std::to_string(t.line) + ": expected a positive dimension, got '" + t.text + "'");
    return static_cast<std::size_t>(v);
}

}   // namespace

BimatrixGame parse_game(std::istream& in)
{
    const auto tokens = tokenize(in);
    if (tokens.size() < 2)
        throw ParseError("missing dimensions 'm n'");
    const std::size_t m = parse_dimension(tokens[0]);
    const std::size_t n = parse_dimension(tokens[1]);
    const std::size_t expected = 2 + 2 * m * n;
    if (tokens.size() != expected)
        throw ParseError("expected " + std::to_string(2 * m * n) + " payoff entries, found " +
                         std::to_string(tokens.size() - 2));

    RMatrix a(m, n);
    RMatrix b(m, n);
    std::size_t k = 2;
    for (RMatrix* mat : {&a, &b})
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j, ++k)
            {
                try
                {
                    (*mat)(i, j) = parse_rational(tokens[k].text);
                }
                catch (const ParseError& e)
                {
                    throw ParseError("line " + std::to_string(tokens[k].line) + ": " + e.what());
                }
            }
    return BimatrixGame(std::move(a), std::move(b));
}

BimatrixGame parse_game_string(const std::string& text)
{
    std::istringstream in(text);
    return parse_game(in);
}

BimatrixGame read_game_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_game(in);
}

std::string format_game(const BimatrixGame& g)
{
    std::ostringstream os;
    os << g.m() << " " << g.n() << "\n";
    for (const RMatrix* mat : {&g.A(), &g.B()})
        for (std::size_t i = 0; i < g.m(); ++i)
        {
            for (std::size_t j = 0; j < g.n(); ++j)
                os << (j > 0 ? " " : "") << to_string((*mat)(i, j));
            os << "\n";
        }
    return os.str();
}

std::string format_equilibrium(const EquilibriumPoint& p)
{
    std::string out = "x=(" + to_string(p.strategies.x) + ") y=(" + to_string(p.strategies.y) + ") payoffs=(" +
                      to_string(p.payoff1) + "," + to_string(p.payoff2) + ")";
    if (p.source_xi)
        out += " xi=" + to_string(*p.source_xi);
    return out;
}

nlohmann::json to_json(const EquilibriumPoint& p)
{
    auto strings = [](const RVector& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : v)
            arr.push_back(to_string(e));
        return arr;
    };
    nlohmann::json j;
    j["x"] = strings(p.strategies.x);
    j["y"] = strings(p.strategies.y);
    j["payoff1"] = to_string(p.payoff1);
    j["payoff2"] = to_string(p.payoff2);
    j["source_xi"] = p.source_xi ? nlohmann::json(to_string(*p.source_xi)) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const std::vector<EquilibriumPoint>& points)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : points)
        arr.push_back(to_json(p));
    return arr;
}

nlohmann::json to_json(const TraceRow& row)
{
    nlohmann::json j;
    j["kind"] = row.is_point ? "point" : "interval";
    j["xi1"] = to_string(row.xi1);
    j["xi2"] = to_string(row.xi2);
    j["objective"] = to_string(row.objective);
    j["binding"] = row.binding;
    return j;
}

std::string format_trace_table(const SweepTrace& trace)
{
    std::ostringstream os;
    for (const auto& row : trace.table)
    {
        if (row.is_point)
            os << "xi = " << to_string(row.xi1);
        else
            os << "xi in (" << to_string(row.xi1) << ", " << to_string(row.xi2) << ")";
        os << "  objective " << (row.is_point ? "" : "(midpoint) ") << to_string(row.objective)
           << "  binding " << to_string(row.binding) << "\n";
    }
    return os.str();
}

}   // namespace rank1
