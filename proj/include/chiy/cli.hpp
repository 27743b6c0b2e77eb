#pragma once

#include <string>
#include <vector>

#include "chiy/report.hpp"

namespace chiy::cli {

enum ExitCode { ok = 0, verification_failed = 1, usage_error = 2, parse_error = 3 };

struct Outcome {
  std::string out;
  std::string err;
  int exit_code = ok;
};

/// Runs one command line (without the program name).
Outcome run(const std::vector<std::string>& args);

/// The JSON form of a report list, as emitted under "reports".
std::string reports_json(const std::vector<VerifyReport>& reports);

}  // namespace chiy::cli
