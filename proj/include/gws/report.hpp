#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "gws/exactalg/ratfunc.hpp"

namespace gws {

struct Failure {
  std::string location;
  std::string lhs;
  std::string rhs;
};

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

// Outcome of one identity check. Status is fail iff failures is non-empty.
struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::skipped;
  std::vector<Failure> failures;
  std::size_t compared = 0;
  std::vector<std::string> notes;
  double wall_ms = 0;

  VerificationReport() = default;
  explicit VerificationReport(std::string name) : check(std::move(name)) {}

  VerificationReport& param(std::string key, std::string value);
  VerificationReport& param(std::string key, long value);

  bool expect_equal(const std::string& location, const RatFunc& lhs, const RatFunc& rhs);
  bool expect_equal(const std::string& location, const Rational& lhs, const Rational& rhs);
  // Records a failure unless `ok`; `lhs`/`rhs` describe the two sides.
  bool expect(const std::string& location, bool ok, const std::string& lhs, const std::string& rhs);

  // Folds another report's comparisons and failures into this one.
  void absorb(const VerificationReport& sub, const std::string& prefix = {});

  // Fixes the status: pass/fail when anything was compared, skipped otherwise.
  VerificationReport& finish();
  bool passed() const { return status == Status::pass; }
};

// Measures wall time into report.wall_ms on destruction.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace gws
