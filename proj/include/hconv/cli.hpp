#pragma once

#include <iosfwd>
#include <string>

#include "hconv/json_io.hpp"

namespace hconv::cli {

/// A fully parsed and validated invocation. Identical configs produce
/// bit-identical output (fixed seeds, fixed iteration orders).
struct RunConfig {
  std::string command;      // shear|convolve|dilatation|zeros|verify|scan|render
  Json params;              // per-command parameters
  std::string output_path;  // empty writes to stdout
  std::string format;       // json|text|svg
};

/// Exit codes: 0 success / verification pass, 1 usage error,
/// 2 verification fail, 3 numerical-integrity error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv front end: parses into a RunConfig and dispatches.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hconv::cli
