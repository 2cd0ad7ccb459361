#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gnerve {

/// A single failed law or structural instance found by a validator.
struct Violation {
  enum class Kind { structural, law };
  Kind kind = Kind::law;
  std::string rule;
  std::string witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Exhaustive result of a validator: every violated instance, never fail-fast.
class ValidationReport {
 public:
  void structural(std::string rule, std::string witness) {
    items_.push_back({Violation::Kind::structural, std::move(rule), std::move(witness)});
  }
  void law(std::string rule, std::string witness) {
    items_.push_back({Violation::Kind::law, std::move(rule), std::move(witness)});
  }
  void merge(const ValidationReport& other, const std::string& prefix = {});

  bool ok() const { return items_.empty(); }
  bool has_structural() const;
  std::size_t size() const { return items_.size(); }
  const std::vector<Violation>& items() const { return items_; }
  std::size_t count(const std::string& rule) const;
  std::string summary(std::size_t max_lines = 20) const;

 private:
  std::vector<Violation> items_;
};

enum class Status { pass, fail, inconclusive };

const char* to_string(Status s);

/// Outcome of one named check in a check suite.
struct CheckResult {
  std::string check;
  Status status = Status::pass;
  std::vector<std::string> witnesses;
  bool required = true;
  std::string note;
  std::vector<std::pair<std::string, std::uint64_t>> counts;
};

CheckResult from_report(std::string check, const ValidationReport& report, bool required = true);

/// fail if any required check fails, else inconclusive if any check is, else pass.
Status overall_status(const std::vector<CheckResult>& checks);

/// Thrown when input tables reference unknown names or are otherwise malformed.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// A construction produced something outside the class it should stay in.
class ClosureViolation : public std::runtime_error {
 public:
  ClosureViolation(std::string what, std::vector<std::string> witnesses);
  const std::vector<std::string>& witnesses() const { return witnesses_; }

 private:
  std::vector<std::string> witnesses_;
};

}  // namespace gnerve
