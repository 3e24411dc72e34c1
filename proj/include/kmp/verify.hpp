#pragma once

// Named end-to-end reproductions of the reference identities for paperH,
// each producing a machine-readable report.

#include <string>
#include <string_view>
#include <vector>

#include "kmp/io.hpp"

namespace kmp {

struct CaseReport {
  std::string name;
  std::string inputs;
  std::vector<bool> checks;  // per order (or per item for catalog-style cases)
  std::vector<std::string> notes;
  bool passed = false;       // every check passed
  double wall_seconds = 0.0;
};

struct VerifyOptions {
  int threads = 1;
};

const std::vector<std::string>& case_names();
// Throws UnknownCase.
CaseReport run_case(std::string_view name, const VerifyOptions& options = {});

io::Json report_to_json(const CaseReport& report, bool with_timing);

}  // namespace kmp
