#pragma once

#include <string>
#include <vector>

#include "session.hpp"

namespace macq {

struct VerifyLine {
  std::string name;
  bool pass = false;
  std::string detail;  // achieved bound, or the counterexample on failure
};

struct VerifyResult {
  std::string suite;
  bool advisory = false;  // conjecture evidence: reported, never failing
  std::vector<VerifyLine> lines;
  bool pass = true;
  int checked = 0;
};

struct VerifyOptions {
  int max_size = 5;  // bound on |lambda^{[r]}| (or |lambda| + |mu|)
  int r = 3;         // bound on family length
  int jobs = 1;      // worker threads over independent instances
  Session* session = nullptr;  // optional persistent cache
};

// suite names accepted by run_suite, in canonical order
const std::vector<std::string>& suite_names();

// runs one property suite; throws std::invalid_argument for unknown names
// or out-of-budget options
VerifyResult run_suite(const std::string& suite, const VerifyOptions& opt);

std::string render_plain(const VerifyResult& res);
std::string render_records(const VerifyResult& res);

}  // namespace macq
