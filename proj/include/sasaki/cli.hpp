#pragma once

#include <iosfwd>
#include <string>

namespace sasaki::cli {

struct Command {
  std::string group;   // cone | polytope | join | potential
  std::string action;  // e.g. "check", "reverse", "extremal"
  /// A path, "-" for the input stream, or inline JSON text.
  std::string input = "-";
  std::string output = "-";
  /// Reeb vector for `cone slice|quasiregular`, as JSON; overrides a "reeb"
  /// field in the input document.
  std::string reeb;
  std::size_t grid = 64;
  double tol = 1e-6;
  int json_indent = 2;
  bool verbose = false;
};

/// Exit status: 0 decided true or success, 1 decided false (the report
/// carries the certificate), 2 input error ({"error": code, "detail": text}).
int run(const Command& cmd, std::istream& in, std::ostream& out);

}  // namespace sasaki::cli
