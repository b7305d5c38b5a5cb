#pragma once

// Batch command-line front end. Reports are JSON documents with a top-level
// "schema": 1; all numbers that are not counts are exact rationals "a/b".

#include "vfalg/catalog.hpp"
#include "vfalg/jetfock.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace vfalg::cli {

enum ExitCode { ok = 0, check_failed = 1, usage_error = 2 };

// Runs one invocation; args excludes the program name. The report goes to
// `out`, diagnostics and wall time to `err`. When VFALG_OUTPUT_DIR is set,
// the report is also written to <dir>/<command>.<json|csv>.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::ordered_json algebra_json(const BuiltAlgebra& a);
nlohmann::ordered_json jet_matrix_json(const JetActionMatrix& j);

// "x,y|th1,th2" with optional ":weight" suffixes; even names left of '|'.
Coords parse_coords(const std::string& spec);

}  // namespace vfalg::cli
