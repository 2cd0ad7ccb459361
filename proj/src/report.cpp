#include "gnerve/report.hpp"

#include <algorithm>
#include <sstream>

namespace gnerve {

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.items_) {
    items_.push_back({v.kind, prefix.empty() ? v.rule : prefix + "." + v.rule, v.witness});
  }
}

bool ValidationReport::has_structural() const {
  return std::any_of(items_.begin(), items_.end(),
                     [](const Violation& v) { return v.kind == Violation::Kind::structural; });
}

std::size_t ValidationReport::count(const std::string& rule) const {
  return static_cast<std::size_t>(std::count_if(
      items_.begin(), items_.end(), [&](const Violation& v) { return v.rule == rule; }));
}

std::string ValidationReport::summary(std::size_t max_lines) const {
  std::ostringstream os;
  std::size_t n = 0;
  for (const auto& v : items_) {
    if (n++ == max_lines) {
      os << "... (" << items_.size() - max_lines << " more)\n";
      break;
    }
    os << (v.kind == Violation::Kind::structural ? "structural " : "") << v.rule << ": "
       << v.witness << "\n";
  }
  return os.str();
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

CheckResult from_report(std::string check, const ValidationReport& report, bool required) {
  CheckResult r;
  r.check = std::move(check);
  r.required = required;
  r.status = report.ok() ? Status::pass : Status::fail;
  for (const auto& v : report.items()) r.witnesses.push_back(v.rule + ": " + v.witness);
  return r;
}

Status overall_status(const std::vector<CheckResult>& checks) {
  bool inconclusive = false;
  for (const auto& c : checks) {
    if (c.required && c.status == Status::fail) return Status::fail;
    if (c.status == Status::inconclusive) inconclusive = true;
  }
  return inconclusive ? Status::inconclusive : Status::pass;
}

namespace {
std::string join_problems(const std::vector<std::string>& ps) {
  std::string s = "structural error";
  for (const auto& p : ps) s += "\n  " + p;
  return s;
}
}  // namespace

StructuralError::StructuralError(std::vector<std::string> problems)
    : std::runtime_error(join_problems(problems)), problems_(std::move(problems)) {}

ClosureViolation::ClosureViolation(std::string what, std::vector<std::string> witnesses)
    : std::runtime_error(std::move(what)), witnesses_(std::move(witnesses)) {}

}  // namespace gnerve
