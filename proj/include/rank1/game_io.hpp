#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rank1/game.hpp"
#include "rank1/parametric.hpp"

namespace rank1 {

/**
 * Text game format: `m n`, then m rows of A, then m rows of B. Entries are
 * integers or p/q separated by whitespace; `#` starts a comment.
 * Throws ParseError with a line number.
 */
BimatrixGame parse_game(std::istream& in);
BimatrixGame parse_game_string(const std::string& text);
BimatrixGame read_game_file(const std::string& path);

std::string format_game(const BimatrixGame& g);

/** `x=(..) y=(..) payoffs=(p1,p2)` with an optional ` xi=..`. */
std::string format_equilibrium(const EquilibriumPoint& p);

nlohmann::json to_json(const EquilibriumPoint& p);
nlohmann::json to_json(const std::vector<EquilibriumPoint>& points);
nlohmann::json to_json(const TraceRow& row);

/** `xi`, `objective` and `binding` columns of the sweep table, one row per line. */
std::string format_trace_table(const SweepTrace& trace);

}   // namespace rank1
