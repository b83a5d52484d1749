#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "origami/alhazen.hpp"
#include "origami/classifier.hpp"
#include "origami/trace.hpp"

namespace origami {

using Json = nlohmann::json;

inline constexpr std::string_view kTowerSchema = "origami.tower/1";
inline constexpr std::string_view kNumberSchema = "origami.number/1";
inline constexpr std::string_view kTraceSchema = "origami.trace/1";
inline constexpr std::string_view kReportSchema = "origami.report/1";
inline constexpr std::string_view kAlhazenSchema = "origami.alhazen/1";

// Exact values are written as "p/q" strings, decimals as strings with
// `digits` significant digits. Object keys come out sorted, so equal inputs
// give equal bytes.

// levels: kind ("sqrt" or "trisection") and the parameter's coordinates in
// the level below.
Json tower_to_json(const TowerPtr& F, int digits = 30);
// Replays the levels with adjoin_sqrt / adjoin_trisection_root. ParseError
// on malformed input or when a level does not reproduce.
TowerPtr tower_from_json(const Json& j);

// Coordinates in x's tower plus a decimal; the tower is given by the context.
Json number_to_json(const AlgebraicNumber& x, int digits = 30);
AlgebraicNumber number_from_json(const Json& j, const TowerPtr& F);
// Self-contained: schema, tower and value.
Json number_document(const AlgebraicNumber& x, int digits = 30);

Json point_to_json(const Point& p, int digits = 30);
Json line_to_json(const Line& l, int digits = 30);

// Every object is written lifted to the trace's tower.
Json trace_to_json(const ConstructionTrace& t, int digits = 30);
// Rebuilds and validates (InvalidTrace when an incidence fails).
ConstructionTrace trace_from_json(const Json& j);

Json report_to_json(const ClassificationReport& r, int digits = 30);

Json solution_to_json(const SolutionSet& s, int digits = 30);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);
// ParseError on invalid JSON.
Json parse_json(std::string_view text);

}  // namespace origami
