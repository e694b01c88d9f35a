#pragma once

#include <ostream>
#include <string>

#include "cli/config.hpp"
#include "cli/report.hpp"

namespace cyint::app {

struct RunOutcome {
  int exit_code = 0;
  /// Rendered report; empty on configuration errors.
  std::string text;
  std::string error;
};

/// Executes one configured run. `diagnostics` receives progress lines (may be null).
RunOutcome run(const RunConfig& config, std::ostream* diagnostics);

/// Builds the report without rendering; throws on errors.
Report execute(const RunConfig& config, std::ostream* diagnostics);

}  // namespace cyint::app
