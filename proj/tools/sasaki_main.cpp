#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sasaki/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Toric Sasaki geometry: cones, labelled polytopes, joins and extremal potentials"};
  app.require_subcommand(1);
  app.fallthrough();

  sasaki::cli::Command cmd;
  app.add_option("--input", cmd.input, "Input file, '-' for stdin, or inline JSON")->capture_default_str();
  app.add_option("--output", cmd.output, "Output file or '-' for stdout")->capture_default_str();
  app.add_option("--grid", cmd.grid, "Grid points per axis")->check(CLI::Range(std::size_t{8}, std::size_t{1} << 20))->capture_default_str();
  app.add_option("--tol", cmd.tol, "Decision tolerance for numeric residuals")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--json-indent", cmd.json_indent, "Indent width; negative for compact output")->capture_default_str();
  app.add_flag("-v,--verbose", cmd.verbose, "Echo the parsed input in the report");

  const std::map<std::string, std::vector<std::string>> actions = {
      {"cone", {"check", "slice", "quasiregular", "reduce"}},
      {"polytope", {"rational", "characteristic", "product-split"}},
      {"join", {"smooth", "generators", "polytope", "reverse", "easy-reverse"}},
      {"potential", {"curvature", "extremal", "split"}},
  };
  for (const auto& [group, names] : actions) {
    auto* g = app.add_subcommand(group);
    g->require_subcommand(1);
    g->fallthrough();
    for (const auto& name : names) {
      auto* a = g->add_subcommand(name);
      a->fallthrough();
      if (group == "cone" && (name == "slice" || name == "quasiregular"))
        a->add_option("--reeb", cmd.reeb, "Reeb vector as JSON, e.g. [\"1\",\"1\",\"1\"]");
      a->callback([&cmd, group = group, name = name] {
        cmd.group = group;
        cmd.action = name;
      });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return sasaki::cli::run(cmd, std::cin, std::cout);
}
