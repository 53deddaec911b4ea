#include "sasaki/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "sasaki/json_io.hpp"

namespace sasaki::cli {

namespace {

using json_io::json;
using json_io::to_json;

struct Outcome {
  int status = 0;
  json body;
};

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorCode::invalid_argument, what); }

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) bad_input("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string read_input(const std::string& spec, std::istream& in) {
  if (spec == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (spec[first] == '{' || spec[first] == '[')) return spec;
  return read_file(spec);
}

const json& member(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw Error(ErrorCode::parse_error, std::string("missing field '") + key + "'");
  return doc.at(key);
}

// A cone document is either the cone itself or {"cone": ..., "reeb": ...}.
Cone cone_of(const json& doc) {
  return json_io::cone_from_json(doc.is_object() && doc.contains("cone") ? doc.at("cone") : doc);
}

LabelledPolytope polytope_of(const json& doc) {
  return json_io::polytope_from_json(doc.is_object() && doc.contains("polytope") ? doc.at("polytope") : doc);
}

ReebVector reeb_of(const Command& cmd, const json& doc, std::size_t dim) {
  if (!cmd.reeb.empty()) return json_io::reeb_from_json(json_io::parse(cmd.reeb), dim);
  if (doc.is_object() && doc.contains("reeb")) return json_io::reeb_from_json(doc.at("reeb"), dim);
  bad_input("a Reeb vector is required (--reeb or a \"reeb\" field)");
}

Outcome cone_command(const Command& cmd, const json& doc) {
  const Cone C = cone_of(doc);
  if (cmd.action == "check") {
    if (!is_strictly_convex(C)) return {1, {{"strictly_convex", false}, {"good", false}}};
    const auto g = is_good(C);
    json body = to_json(g);
    body["strictly_convex"] = true;
    return {g.good ? 0 : 1, body};
  }
  if (cmd.action == "slice") {
    const auto s = characteristic_polytope(C, reeb_of(cmd, doc, C.dim));
    return {0, to_json(s)};
  }
  if (cmd.action == "quasiregular") {
    const ReebVector b = reeb_of(cmd, doc, C.dim);
    if (!sasaki_cone_contains(C, b))
      throw Error(ErrorCode::not_a_reeb_vector, "the vector is not in the interior of the dual cone");
    const bool q = is_quasi_regular(C, b);
    return {q ? 0 : 1, {{"quasi_regular", q}, {"reeb", to_json(b)}}};
  }
  if (cmd.action == "reduce") {
    if (!is_strictly_convex(C)) return {1, {{"reducible", false}, {"strictly_convex", false}}};
    const auto g = is_good(C);
    if (!g.good) return {1, {{"reducible", false}, {"goodness", to_json(g)}}};
    const auto part = find_simplex_product_partition(C);
    if (!part) return {1, {{"reducible", false}, {"goodness", to_json(g)}}};
    const auto cert = find_splitting_reeb(C, *part);
    const auto w = decompose_as_join(cert);
    json body = to_json(cert);
    body["reducible"] = true;
    body["weights"] = {to_json(w.first), to_json(w.second)};
    return {0, body};
  }
  bad_input("unknown cone action '" + cmd.action + "'");
}

Outcome polytope_command(const Command& cmd, const json& doc) {
  const LabelledPolytope P = polytope_of(doc);
  if (cmd.action == "rational") {
    const bool r = is_rational(P);
    return {r ? 0 : 1, {{"rational", r}}};
  }
  if (cmd.action == "characteristic") {
    const auto r = is_characteristic(P);
    return {r.characteristic ? 0 : 1, to_json(r)};
  }
  if (cmd.action == "product-split") {
    const auto part = product_split(P);
    if (!part) return {1, {{"product", false}}};
    const auto f = split_factors(P, *part);
    return {0,
            {{"product", true},
             {"partition", {part->first, part->second}},
             {"factors", {to_json(f.first), to_json(f.second)}}}};
  }
  bad_input("unknown polytope action '" + cmd.action + "'");
}

Integer opt_integer(const json& doc, const char* key, long fallback) {
  return doc.is_object() && doc.contains(key) ? json_io::integer_from_json(doc.at(key)) : Integer(fallback);
}

Outcome join_command(const Command& cmd, const json& doc) {
  using json_io::integer_from_json;
  if (cmd.action == "smooth") {
    const auto p = make_join_params(integer_from_json(member(doc, "l1")), integer_from_json(member(doc, "l2")),
                                    opt_integer(doc, "upsilon1", 1), opt_integer(doc, "upsilon2", 1));
    Integer g;
    mpz_gcd(g.get_mpz_t(), Integer(p.l1 * p.upsilon2).get_mpz_t(), Integer(p.l2 * p.upsilon1).get_mpz_t());
    const bool s = join_is_smooth(p);
    return {s ? 0 : 1, {{"smooth", s}, {"gcd", to_json(g)}}};
  }
  if (cmd.action == "generators") {
    const Integer l1 = integer_from_json(member(doc, "l1")), l2 = integer_from_json(member(doc, "l2"));
    const auto g = join_generators(l1, l2);
    const auto c = s1_join_cover(l1, l2);
    return {0,
            {{"reeb", {to_json(g.reeb.first), to_json(g.reeb.second)}},
             {"quotient", {to_json(g.quotient.first), to_json(g.quotient.second)}},
             {"cover_degree", to_json(c.cover_degree)},
             {"reeb_scale", to_json(c.reeb_scale)}}};
  }
  if (cmd.action == "polytope") {
    const auto P = join_polytope(json_io::polytope_from_json(member(doc, "first")),
                                 json_io::polytope_from_json(member(doc, "second")),
                                 integer_from_json(member(doc, "l1")), integer_from_json(member(doc, "l2")));
    return {0, to_json(P)};
  }
  if (cmd.action == "reverse") {
    const auto s = reverse_join(json_io::reverse_problem_from_json(doc));
    return {s.joinable ? 0 : 1, to_json(s)};
  }
  if (cmd.action == "easy-reverse") {
    const auto s = easy_reverse(integer_from_json(member(doc, "n")), integer_from_json(member(doc, "v1")),
                                integer_from_json(member(doc, "v2")));
    return {0, to_json(s)};
  }
  bad_input("unknown join action '" + cmd.action + "'");
}

// The relative part f of u = u0 + f: an expression tree under "potential",
// inline rows under "grid_rows", or a plain-row file under "grid_file".
SymplecticPotential potential_of(const json& doc, const LabelledPolytope& P) {
  if (doc.contains("potential")) return SymplecticPotential(P, json_io::expr_from_json(doc.at("potential")));
  if (doc.contains("grid_rows")) {
    std::vector<std::vector<double>> rows;
    for (const auto& r : doc.at("grid_rows")) rows.push_back(r.get<std::vector<double>>());
    return SymplecticPotential(P, GridSpline::from_rows(rows));
  }
  if (doc.contains("grid_file")) {
    std::istringstream in(read_file(doc.at("grid_file").get<std::string>()));
    return SymplecticPotential(P, GridSpline::from_rows(json_io::read_grid_rows(in)));
  }
  return SymplecticPotential(P);
}

json sample(const JetFunction& f, const LabelledPolytope& P, std::size_t n) {
  const auto v = values_of(f, P.dim());
  json pts = json::array(), vals = json::array();
  for (const auto& x : interior_grid(P, GridSpec{n, 4})) {
    pts.push_back(x);
    vals.push_back(v(x));
  }
  return {{"points", pts}, {"values", vals}};
}

Outcome potential_command(const Command& cmd, const json& doc) {
  const LabelledPolytope P = polytope_of(doc);
  const GridSpec grid{cmd.grid, 4};
  if (cmd.action == "curvature") {
    const auto u = potential_of(doc, P);
    json pts = json::array(), vals = json::array();
    for (const auto& x : interior_grid(P, grid)) {
      pts.push_back(x);
      vals.push_back(abreu_scalar_curvature(u, x));
    }
    return {0, {{"points", pts}, {"values", vals}, {"interpolation_degree", u.interpolation_degree()}}};
  }
  if (cmd.action == "extremal") {
    const auto r = extremality_residual(potential_of(doc, P), grid);
    json body = to_json(r);
    body["tolerance"] = cmd.tol;
    return {r.residual_sup < cmd.tol ? 0 : 1, body};
  }
  if (cmd.action == "split") {
    JetFunction f;
    if (doc.contains("potential")) {
      f = jets_of(json_io::expr_from_json(doc.at("potential")));
    } else {
      const auto u = potential_of(doc, P);
      if (u.relative_kind() == SymplecticPotential::Relative::none) bad_input("split needs a relative potential");
      f = [u](const std::shared_ptr<const JetLayout>& L, const std::vector<double>& x) { return u.relative_jet(L, x); };
    }
    const auto s = average_split(P, f);
    const double defect = split_defect(P, values_of(f, P.dim()), values_of(s.f1, s.product.first.dim()),
                                       values_of(s.f2, s.product.second.dim()));
    json body = {{"defect", defect},
                 {"tolerance", cmd.tol},
                 {"first", to_json(s.product.first)},
                 {"second", to_json(s.product.second)},
                 {"f1", sample(s.f1, s.product.first, cmd.grid)},
                 {"f2", sample(s.f2, s.product.second, cmd.grid)},
                 {"min_pivot_first", s.min_pivot_first},
                 {"min_pivot_second", s.min_pivot_second}};
    return {defect < cmd.tol ? 0 : 1, body};
  }
  bad_input("unknown potential action '" + cmd.action + "'");
}

Outcome dispatch(const Command& cmd, std::istream& in) {
  if (cmd.grid < 8) bad_input("grid resolution must be at least 8");
  if (!(cmd.tol > 0)) bad_input("tolerance must be positive");
  const json doc = json_io::parse(read_input(cmd.input, in));
  Outcome o;
  if (cmd.group == "cone")
    o = cone_command(cmd, doc);
  else if (cmd.group == "polytope")
    o = polytope_command(cmd, doc);
  else if (cmd.group == "join")
    o = join_command(cmd, doc);
  else if (cmd.group == "potential")
    o = potential_command(cmd, doc);
  else
    bad_input("unknown command group '" + cmd.group + "'");
  if (cmd.verbose) o.body["input"] = doc;
  return o;
}

}  // namespace

int run(const Command& cmd, std::istream& in, std::ostream& out) {
  Outcome o;
  try {
    o = dispatch(cmd, in);
  } catch (const Error& e) {
    o = {2, {{"error", std::string(to_string(e.code()))}, {"detail", e.what()}}};
  } catch (const json::exception& e) {
    o = {2, {{"error", std::string(to_string(ErrorCode::parse_error))}, {"detail", e.what()}}};
  }
  const std::string text = o.body.dump(cmd.json_indent) + "\n";
  if (cmd.output == "-") {
    out << text;
  } else {
    std::ofstream f(cmd.output, std::ios::binary);
    if (!f) {
      out << json{{"error", std::string(to_string(ErrorCode::invalid_argument))},
                  {"detail", "cannot write '" + cmd.output + "'"}}
                 .dump(cmd.json_indent)
          << "\n";
      return 2;
    }
    f << text;
  }
  return o.status;
}

}  // namespace sasaki::cli
