#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gws/report.hpp"

namespace gws::cli {

inline constexpr int kReportVersion = 1;

// Deterministic text form: versioned header, one block per report, no timing.
std::string format_reports(const std::vector<VerificationReport>& reports);
// JSON mirror; wall times live under "timing", outside the report payload.
std::string reports_json(const std::vector<VerificationReport>& reports);

// Exit code: 0 when every report passed or was skipped, 1 otherwise.
int exit_code(const std::vector<VerificationReport>& reports);

// Full command line entry point; returns the process exit code (0, 1 or 2).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gws::cli
