#include "gws/report.hpp"

namespace gws {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

VerificationReport& VerificationReport::param(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
  return *this;
}

VerificationReport& VerificationReport::param(std::string key, long value) {
  return param(std::move(key), std::to_string(value));
}

bool VerificationReport::expect(const std::string& location, bool ok, const std::string& lhs,
                                const std::string& rhs) {
  ++compared;
  if (!ok) failures.push_back({location, lhs, rhs});
  return ok;
}

bool VerificationReport::expect_equal(const std::string& location, const RatFunc& lhs, const RatFunc& rhs) {
  bool ok = lhs == rhs;
  return expect(location, ok, ok ? std::string() : lhs.to_string(), ok ? std::string() : rhs.to_string());
}

bool VerificationReport::expect_equal(const std::string& location, const Rational& lhs, const Rational& rhs) {
  bool ok = lhs == rhs;
  return expect(location, ok, rational_to_string(lhs), rational_to_string(rhs));
}

void VerificationReport::absorb(const VerificationReport& sub, const std::string& prefix) {
  compared += sub.compared;
  for (const auto& f : sub.failures) failures.push_back({prefix + f.location, f.lhs, f.rhs});
  for (const auto& n : sub.notes) notes.push_back(prefix + n);
}

VerificationReport& VerificationReport::finish() {
  if (!failures.empty())
    status = Status::fail;
  else
    status = compared ? Status::pass : Status::skipped;
  return *this;
}

}  // namespace gws
