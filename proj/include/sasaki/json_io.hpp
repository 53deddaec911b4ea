#pragma once

// JSON forms of the library's inputs and reports. Exact quantities are
// written as "p/q" strings, diagnostics as shortest round-trip doubles.
// Object keys come out sorted, so output is byte-stable.

#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sasaki/cone.hpp"
#include "sasaki/cone_reducibility.hpp"
#include "sasaki/expression.hpp"
#include "sasaki/extremal_numeric.hpp"
#include "sasaki/join_calculus.hpp"
#include "sasaki/labelled_polytope.hpp"
#include "sasaki/moment_cone.hpp"

namespace sasaki::json_io {

using nlohmann::json;

/// Accepts "p/q" strings and JSON integers. Throws parse-error otherwise.
Rational rational_from_json(const json& j);
Integer integer_from_json(const json& j);
json to_json(const Rational& q);
json to_json(const Integer& z);
json to_json(const RatVector& v);
json to_json(const IntVector& v);

/// {"dim": n, "facets": [{"normal": ["p/q", ...], "constant": "p/q"}, ...]}
LabelledPolytope polytope_from_json(const json& j);
json to_json(const LabelledPolytope& P);

/// {"dim": k, "labels": [[int, ...], ...]}
Cone cone_from_json(const json& j);
json to_json(const Cone& C);

/// {"rational": [...], "symbolic": [[...], ...], "tau": [...]}; the last two
/// are optional.
ReebVector reeb_from_json(const json& j, std::size_t dim);
json to_json(const ReebVector& b);

json to_json(const GoodnessReport& g);
json to_json(const CharacteristicSlice& s);
json to_json(const CharacteristicReport& r);
json to_json(const SplittingCertificate& c);

/// {"n", "m1", "m2", "k1", "k2"} and {"r", "w", "l", "joinable", "smooth"}.
ReverseJoinProblem reverse_problem_from_json(const json& j);
json to_json(const ReverseJoinSolution& s);
json to_json(const EasyReverseSolution& s);

/// Node kinds: {"kind": "const", "value": x}, {"kind": "coord", "index": i},
/// {"kind": "add"|"mul", "args": [...]}, {"kind": "pow", "base": e,
/// "exponent": p}, {"kind": "log", "arg": e}.
Expr expr_from_json(const json& j);
json to_json(const Expr& e);

/// Plain rows "x_1 ... x_n value"; blank lines and lines starting with '#'
/// are skipped.
std::vector<std::vector<double>> read_grid_rows(std::istream& in);

json to_json(const ExtremalReport& r);

/// Parses text, mapping syntax errors to parse-error.
json parse(const std::string& text);

}  // namespace sasaki::json_io
