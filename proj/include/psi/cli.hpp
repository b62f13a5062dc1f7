#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "psi/oracle.hpp"

namespace psi::cli {

enum ExitCode : int {
  kOk = 0,
  kAnomaly = 1,
  kUsage = 2,
  kInternal = 3,
};

// Parses "(a,b,...),(c,d,...)" into residue tuples. An empty string yields no
// generators. Errors are SpecParseError with the byte offset.
std::vector<ElementTuple> parse_generators(const std::string& text);

// Entry point shared by the psi executable and the tests. args excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psi::cli
