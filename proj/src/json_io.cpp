#include "sasaki/json_io.hpp"

#include <sstream>

namespace sasaki::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) fail(std::string("field '") + key + "' must be an array");
  return a;
}

std::size_t size_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

double double_from_json(const json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail("expected a rational as \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(e.what());
  }
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    const Rational q = rational_from_json(j);
    if (q.get_den() != 1) fail("expected an integer, got " + to_string(q));
    return q.get_num();
  }
  fail("expected an integer");
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json to_json(const RatVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

LabelledPolytope polytope_from_json(const json& j) {
  const std::size_t n = size_from_json(field(j, "dim"), "dim");
  std::vector<AffineFunction> fs;
  for (const auto& f : array_field(j, "facets")) {
    AffineFunction a;
    for (const auto& c : array_field(f, "normal")) a.normal.push_back(rational_from_json(c));
    a.constant = rational_from_json(field(f, "constant"));
    if (a.normal.size() != n) fail("facet normal length differs from dim");
    fs.push_back(std::move(a));
  }
  return LabelledPolytope(n, std::move(fs));
}

json to_json(const LabelledPolytope& P) {
  json fs = json::array();
  for (const auto& f : P.facets()) fs.push_back({{"normal", to_json(f.normal)}, {"constant", to_json(f.constant)}});
  return {{"dim", P.dim()}, {"facets", fs}};
}

Cone cone_from_json(const json& j) {
  const std::size_t k = size_from_json(field(j, "dim"), "dim");
  std::vector<IntVector> labels;
  for (const auto& l : array_field(j, "labels")) {
    if (!l.is_array()) fail("each label must be an array of integers");
    IntVector v;
    for (const auto& c : l) v.push_back(integer_from_json(c));
    if (v.size() != k) fail("label length differs from dim");
    labels.push_back(std::move(v));
  }
  return make_cone(k, std::move(labels));
}

json to_json(const Cone& C) {
  json ls = json::array();
  for (const auto& l : C.labels) ls.push_back(to_json(l));
  return {{"dim", C.dim}, {"labels", ls}};
}

ReebVector reeb_from_json(const json& j, std::size_t dim) {
  ReebVector b;
  const json& r = j.is_array() ? j : array_field(j, "rational");
  for (const auto& c : r) b.rational.push_back(rational_from_json(c));
  if (b.rational.size() != dim) fail("Reeb vector length differs from the cone dimension");
  b.symbolic = RatMatrix(dim, 0);
  if (j.is_object() && j.contains("symbolic")) {
    const json& s = array_field(j, "symbolic");
    if (s.size() != dim) fail("symbolic part must have one row per coordinate");
    std::vector<RatVector> rows;
    for (const auto& row : s) {
      if (!row.is_array()) fail("symbolic rows must be arrays");
      RatVector v;
      for (const auto& c : row) v.push_back(rational_from_json(c));
      rows.push_back(std::move(v));
    }
    const std::size_t m = rows.empty() ? 0 : rows[0].size();
    try {
      b.symbolic = RatMatrix::from_rows(rows, m);
    } catch (const Error& e) {
      fail(e.what());
    }
    if (j.contains("tau")) {
      for (const auto& t : array_field(j, "tau")) b.tau.push_back(static_cast<long double>(double_from_json(t, "tau")));
    }
    if (b.tau.size() != m) fail("tau must give one value per symbolic column");
  }
  return b;
}

json to_json(const ReebVector& b) {
  json out = {{"rational", to_json(b.rational)}};
  if (b.symbolic.cols() > 0) {
    json rows = json::array();
    for (std::size_t i = 0; i < b.symbolic.rows(); ++i) rows.push_back(to_json(b.symbolic.row(i)));
    out["symbolic"] = rows;
    json tau = json::array();
    for (long double t : b.tau) tau.push_back(static_cast<double>(t));
    out["tau"] = tau;
  }
  return out;
}

json to_json(const GoodnessReport& g) {
  json out = {{"good", g.good}};
  if (!g.good) {
    out["failing_face"] = g.failing_face;
    out["smith_factors"] = to_json(g.smith_factors);
  }
  return out;
}

json to_json(const CharacteristicSlice& s) {
  json dirs = json::array();
  for (const auto& d : s.directions) dirs.push_back(to_json(d));
  return {{"polytope", to_json(s.polytope)},
          {"origin", to_json(s.origin)},
          {"directions", dirs},
          {"primitive_reeb", to_json(s.primitive_reeb)},
          {"normalized_direction", s.normalized_direction}};
}

json to_json(const CharacteristicReport& r) {
  json out = {{"characteristic", r.characteristic}, {"lattice", r.lattice}, {"goodness", to_json(r.goodness)}};
  if (r.characteristic || r.lattice) {
    out["cone"] = to_json(r.cone);
    out["reeb"] = to_json(r.reeb);
  }
  return out;
}

json to_json(const SplittingCertificate& c) {
  return {{"b", to_json(c.b)},
          {"multiplier", to_json(c.multiplier)},
          {"a1", to_json(c.a1)},
          {"a2", to_json(c.a2)},
          {"partition", {c.partition.first, c.partition.second}},
          {"factors", {to_json(c.factors.first), to_json(c.factors.second)}}};
}

ReverseJoinProblem reverse_problem_from_json(const json& j) {
  return {integer_from_json(field(j, "n")), integer_from_json(field(j, "m1")), integer_from_json(field(j, "m2")),
          integer_from_json(field(j, "k1")), integer_from_json(field(j, "k2"))};
}

json to_json(const ReverseJoinSolution& s) {
  json out = {{"r", to_json(s.r)},
              {"joinable", s.joinable},
              {"smooth", s.smooth},
              {"degenerate_product", s.degenerate_product}};
  out["w"] = s.w ? json::array({to_json(s.w->first), to_json(s.w->second)}) : json(nullptr);
  out["l"] = s.l ? json::array({to_json(s.l->first), to_json(s.l->second)}) : json(nullptr);
  return out;
}

json to_json(const EasyReverseSolution& s) {
  return {{"w", {to_json(s.w1), to_json(s.w2)}}, {"l", {to_json(s.l1), to_json(s.l2)}}};
}

Expr expr_from_json(const json& j) {
  const json& k = field(j, "kind");
  if (!k.is_string()) fail("expression kind must be a string");
  const std::string kind = k.get<std::string>();
  if (kind == "const") return Expr::constant(double_from_json(field(j, "value"), "const value"));
  if (kind == "coord") return Expr::coord(size_from_json(field(j, "index"), "coord index"));
  if (kind == "add" || kind == "mul") {
    std::vector<Expr> args;
    for (const auto& a : array_field(j, "args")) args.push_back(expr_from_json(a));
    if (args.empty()) fail(kind + " needs at least one argument");
    return kind == "add" ? Expr::add(std::move(args)) : Expr::mul(std::move(args));
  }
  if (kind == "pow") return Expr::pow(expr_from_json(field(j, "base")), double_from_json(field(j, "exponent"), "exponent"));
  if (kind == "log") return Expr::log(expr_from_json(field(j, "arg")));
  fail("unknown expression kind '" + kind + "'");
}

json to_json(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::constant:
      return {{"kind", "const"}, {"value", e.value()}};
    case Expr::Kind::coord:
      return {{"kind", "coord"}, {"index", e.index()}};
    case Expr::Kind::add:
    case Expr::Kind::mul: {
      json args = json::array();
      for (const auto& c : e.children()) args.push_back(to_json(c));
      return {{"kind", e.kind() == Expr::Kind::add ? "add" : "mul"}, {"args", args}};
    }
    case Expr::Kind::pow:
      return {{"kind", "pow"}, {"base", to_json(e.children()[0])}, {"exponent", e.value()}};
    case Expr::Kind::log:
      return {{"kind", "log"}, {"arg", to_json(e.children()[0])}};
  }
  throw Error(ErrorCode::internal_inconsistency, "unhandled expression kind");
}

std::vector<std::vector<double>> read_grid_rows(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::vector<double> row;
    double v;
    while (ss >> v) row.push_back(v);
    if (!ss.eof()) fail("grid line " + std::to_string(lineno) + " is not a list of numbers");
    if (row.size() < 2) fail("grid line " + std::to_string(lineno) + " needs coordinates and a value");
    if (!rows.empty() && row.size() != rows[0].size())
      fail("grid line " + std::to_string(lineno) + " has a different column count");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail("grid file has no rows");
  return rows;
}

json to_json(const ExtremalReport& r) {
  return {{"extremal", {{"normal", to_json(r.extremal.normal)}, {"constant", to_json(r.extremal.constant)}}},
          {"residual_sup", r.residual_sup},
          {"residual_l2", r.residual_l2},
          {"min_pivot", r.min_pivot},
          {"grid_points", r.grid_points},
          {"grid", {{"points_per_axis", r.grid.points_per_axis}, {"margin_cells", r.grid.margin_cells}}},
          {"interpolation_degree", r.interpolation_degree}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
}

}  // namespace sasaki::json_io
