#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gnerve/io.hpp"

namespace gnerve {

inline constexpr const char* kToolName = "gnerve";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitStructural = 2, kExitInconclusive = 3 };

struct InputDigest {
  std::string path;
  std::string sha256;
};

struct CheckReport {
  std::string command;
  std::vector<InputDigest> inputs;
  std::uint64_t bound = 0;  // 0 when the command does no enumeration
  std::vector<CheckResult> checks;
  std::vector<std::string> errors;  // parse or structural problems; exit 2
  Status overall = Status::pass;
  int exit_code = kExitPass;
};

std::string sha256_hex(const std::string& bytes);

/// Sorts checks by id and fills overall and exit_code.
void finalize(CheckReport& r);
Json report_json(const CheckReport& r);
std::string report_text(const CheckReport& r);

/// Worker count from GNERVE_WORKERS (default 1).
unsigned worker_count();

/// Full command line front end; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gnerve
