#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sasaki/cli.hpp"
#include "sasaki/json_io.hpp"
#include "support.hpp"

using namespace sasaki;
using json_io::json;
using testing::uniform;

namespace {

struct Result {
  int status;
  json body;
  std::string text;
};

Result run(const std::string& group, const std::string& action, const std::string& input,
           cli::Command extra = {}) {
  extra.group = group;
  extra.action = action;
  extra.input = input;
  std::istringstream in;
  std::ostringstream out;
  const int status = cli::run(extra, in, out);
  return {status, json::parse(out.str()), out.str()};
}

const char* segment_doc = R"({"polytope": {"dim": 1, "facets": [
  {"normal": ["1"], "constant": "0"}, {"normal": ["-1"], "constant": "1"}]}})";

}  // namespace

TEST_CASE("rationals and polytopes round-trip through JSON") {
  CHECK(json_io::rational_from_json(json("-6/4")) == make_rational(-3, 2));
  CHECK(json_io::rational_from_json(json(7)) == 7);
  CHECK(json_io::to_json(make_rational(2, -4)) == json("-1/2"));
  CHECK_THROWS_AS(json_io::rational_from_json(json("0.5")), Error);
  CHECK_THROWS_AS(json_io::rational_from_json(json(0.5)), Error);
  for (int t = 0; t < 30; ++t) {
    const auto P = testing::random_simplex_product(4);
    const auto back = json_io::polytope_from_json(json::parse(json_io::to_json(P).dump()));
    CHECK(back == P);
  }
  const Cone C = make_cone(3, {{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}});
  const Cone D = json_io::cone_from_json(json_io::to_json(C));
  CHECK(D.labels == C.labels);
  CHECK_THROWS_AS(json_io::cone_from_json(json::parse(R"({"dim": 2, "labels": [[1, 0, 0]]})")), Error);
}

TEST_CASE("expression trees round-trip through JSON") {
  const Expr x = Expr::coord(0), y = Expr::coord(1);
  const Expr e = Expr::add({Expr::pow(x, 3) * y, Expr::log(x + Expr::constant(2)), Expr::constant(-0.25)});
  const Expr back = json_io::expr_from_json(json_io::to_json(e));
  CHECK(back({0.3, 0.7}) == e({0.3, 0.7}));
  CHECK(json_io::to_json(back) == json_io::to_json(e));
  CHECK_THROWS_AS(json_io::expr_from_json(json::parse(R"({"kind": "sin", "arg": {"kind": "coord", "index": 0}})")),
                  Error);
}

TEST_CASE("grid rows") {
  std::istringstream in("# x value\n0 1\n0.5 2\n\n1 3\n");
  const auto rows = json_io::read_grid_rows(in);
  CHECK(rows.size() == 3);
  CHECK(rows[1] == std::vector<double>{0.5, 2});
  std::istringstream bad("0 1\n0.5 x\n");
  CHECK_THROWS_AS(json_io::read_grid_rows(bad), Error);
  std::istringstream ragged("0 1\n0.5 1 2\n");
  CHECK_THROWS_AS(json_io::read_grid_rows(ragged), Error);
}

TEST_CASE("join reverse example") {
  const auto r = run("join", "reverse", R"({"n":2,"m1":2,"m2":2,"k1":4,"k2":1})");
  CHECK(r.status == 1);
  CHECK(r.body["r"] == "1/5");
  CHECK(r.body["w"] == json::array({3, 2}));
  CHECK(r.body["l"] == json::array({1, 1}));
  CHECK(r.body["joinable"] == false);
}

TEST_CASE("cone reduce on the square cone") {
  const auto r = run("cone", "reduce", R"({"dim":3,"labels":[[1,0,0],[0,1,0],[-1,0,1],[0,-1,1]]})");
  CHECK(r.status == 0);
  CHECK(r.body["b"] == json::array({0, 0, 1}));
  REQUIRE(r.body["factors"].size() == 2);
  for (const auto& f : r.body["factors"]) {
    const auto P = json_io::polytope_from_json(f);
    CHECK(P.dim() == 1);
    CHECK(is_simplex(P));
  }
  const auto orthant = run("cone", "reduce", R"({"dim":3,"labels":[[1,0,0],[0,1,0],[0,0,1]]})");
  CHECK(orthant.status == 1);
  CHECK(orthant.body["reducible"] == false);
}

TEST_CASE("cone check and slice") {
  auto r = run("cone", "check", R"({"dim":3,"labels":[[1,0,0],[1,2,0],[0,0,1]]})");
  CHECK(r.status == 1);
  CHECK(r.body["failing_face"] == json::array({0, 1}));
  CHECK(r.body["smith_factors"] == json::array({1, 2}));
  r = run("cone", "check", R"({"dim":3,"labels":[[1,0,0],[0,1,0],[-1,0,1],[0,-1,1]]})");
  CHECK(r.status == 0);
  CHECK(r.body["good"] == true);

  cli::Command c;
  c.reeb = R"(["0","0","1"])";
  r = run("cone", "slice", R"({"dim":3,"labels":[[1,0,0],[0,1,0],[-1,0,1],[0,-1,1]]})", c);
  CHECK(r.status == 0);
  CHECK(json_io::polytope_from_json(r.body["polytope"]).vertices().size() == 4);
  r = run("cone", "quasiregular",
          R"({"cone": {"dim":3,"labels":[[1,0,0],[0,1,0],[-1,0,1],[0,-1,1]]}, "reeb": {"rational": ["1/3","1/2","2"]}})");
  CHECK(r.status == 0);
  r = run("cone", "quasiregular", R"({"dim":3,"labels":[[1,0,0],[0,1,0],[-1,0,1],[0,-1,1]]})");
  CHECK(r.status == 2);
}

TEST_CASE("polytope and join subcommands") {
  const std::string square = json_io::to_json(testing::unit_square()).dump();
  CHECK(run("polytope", "rational", square).status == 0);
  auto r = run("polytope", "product-split", square);
  CHECK(r.status == 0);
  CHECK(r.body["partition"] == json::parse("[[0,1],[2,3]]"));
  CHECK(run("polytope", "product-split", json_io::to_json(testing::standard_simplex(2)).dump()).status == 1);
  CHECK(run("polytope", "characteristic", square).status == 0);

  r = run("join", "smooth", R"({"l1": 1, "l2": 1, "upsilon1": 2, "upsilon2": 4})");
  CHECK(r.status == 1);
  CHECK(r.body["gcd"] == 2);
  CHECK(run("join", "smooth", R"({"l1": 2, "l2": 3})").status == 0);
  r = run("join", "easy-reverse", R"({"n": -3, "v1": 2, "v2": 5})");
  CHECK(r.status == 0);
  CHECK(r.body["l"] == json::array({3, 1}));
  const json seg = json_io::to_json(testing::segment());
  r = run("join", "polytope", json({{"first", seg}, {"second", seg}, {"l1", 1}, {"l2", 1}}).dump());
  CHECK(r.status == 0);
  CHECK(json_io::polytope_from_json(r.body).dim() == 2);
}

TEST_CASE("potential subcommands") {
  cli::Command c;
  c.grid = 256;
  auto r = run("potential", "extremal", segment_doc, c);
  CHECK(r.status == 0);
  CHECK(r.body["extremal"]["constant"] == "4");
  CHECK(r.body["residual_sup"].get<double>() < 1e-6);
  CHECK(r.body["grid_points"] == 256);

  c.grid = 16;
  r = run("potential", "curvature", segment_doc, c);
  CHECK(r.status == 0);
  for (const auto& v : r.body["values"]) CHECK(v.get<double>() == doctest::Approx(4.0));

  json doc = json::parse(segment_doc);
  doc["potential"] = json::parse(R"({"kind":"mul","args":[{"kind":"const","value":0.1},
      {"kind":"pow","base":{"kind":"coord","index":0},"exponent":3},
      {"kind":"pow","base":{"kind":"add","args":[{"kind":"const","value":1},
        {"kind":"mul","args":[{"kind":"const","value":-1},{"kind":"coord","index":0}]}]},"exponent":3}]})");
  r = run("potential", "extremal", doc.dump(), c);
  CHECK(r.status == 1);
  CHECK(r.body["residual_sup"].get<double>() > 1e-3);

  json sq = {{"polytope", json_io::to_json(testing::unit_square())}};
  sq["potential"] = json::parse(R"({"kind":"mul","args":[{"kind":"coord","index":0},{"kind":"coord","index":1}]})");
  r = run("potential", "split", sq.dump(), c);
  CHECK(r.status == 1);
  CHECK(r.body["defect"].get<double>() == doctest::Approx(1.0 / 12));
  sq["potential"] = json::parse(R"({"kind":"add","args":[{"kind":"pow","base":{"kind":"coord","index":0},"exponent":2},
      {"kind":"coord","index":1}]})");
  r = run("potential", "split", sq.dump(), c);
  CHECK(r.status == 0);

  // grid-sampled relative potential from a plain-row file
  const std::string path = "test_cli_grid.txt";
  {
    std::ofstream f(path);
    for (int i = 0; i <= 20; ++i) f << i / 20.0 << " " << 0.0 << "\n";
  }
  doc = json::parse(segment_doc);
  doc["grid_file"] = path;
  r = run("potential", "curvature", doc.dump(), c);
  std::remove(path.c_str());
  CHECK(r.status == 0);
  CHECK(r.body["interpolation_degree"] == 5);
  CHECK(r.body["values"][3].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("input errors exit with a diagnostic") {
  auto r = run("join", "reverse", R"({"n":2,)");
  CHECK(r.status == 2);
  CHECK(r.body["error"] == "parse-error");
  CHECK(r.body.contains("detail"));
  r = run("join", "reverse", R"({"n":2})");
  CHECK(r.status == 2);
  r = run("cone", "nonsense", R"({"dim":1,"labels":[[1]]})");
  CHECK(r.status == 2);
  CHECK(r.body["error"] == "invalid-argument");
  cli::Command c;
  c.grid = 4;
  CHECK(run("potential", "extremal", segment_doc, c).status == 2);
  c.grid = 64;
  c.tol = 0;
  CHECK(run("potential", "extremal", segment_doc, c).status == 2);
  CHECK(run("polytope", "rational", "does-not-exist.json").status == 2);
}

TEST_CASE("output is byte-stable") {
  for (int t = 0; t < 10; ++t) {
    const std::string problem = json({{"n", uniform(-20, 20)},
                                      {"m1", uniform(1, 9)},
                                      {"m2", uniform(1, 9)},
                                      {"k1", uniform(1, 30)},
                                      {"k2", uniform(1, 30)}})
                                    .dump();
    const auto a = run("join", "reverse", problem), b = run("join", "reverse", problem);
    CHECK(a.text == b.text);
  }
  cli::Command c;
  c.grid = 32;
  CHECK(run("potential", "extremal", segment_doc, c).text == run("potential", "extremal", segment_doc, c).text);
}
