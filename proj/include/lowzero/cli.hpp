#pragma once

#include <iosfwd>
#include <string>

namespace lowzero::cli {

enum class Format { Text, Csv, Json };

struct RunConfig {
  int grid_n = 4001;   // odd, >= 41
  Format format = Format::Text;
  int precision = 6;   // printed significant digits, 3..17 (text only)
  std::string out_path;  // empty writes to the provided stream
};

/// Dispatches one command line. argv[0] is the program name. Results go to
/// `out` unless --out redirects them to a file; diagnostics go to `err`.
/// Exit codes: 0 success, 1 internal or numeric failure, 2 invalid request.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lowzero::cli
