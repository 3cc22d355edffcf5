#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gsp {

struct CheckRecord {
  std::string id;
  std::string paper_location;
  long long cases_run = 0;
  long long cases_passed = 0;
  std::optional<std::string> first_counterexample;
  double wall_time = 0;
  bool passed() const { return !first_counterexample && cases_passed == cases_run; }
};

struct VerifyConfig {
  std::string suite = "all";  // appendix, endoscopy, satake, kostant, all
  int n_max = 4;
  long long samples = 100;
  std::uint64_t seed = 1;
};

struct Report {
  VerifyConfig config;
  std::vector<CheckRecord> records;  // sorted by id
  bool all_pass() const;
  const CheckRecord* find(const std::string& id) const;
};

Report run_verify(const VerifyConfig& cfg);

// JSON with "schema":"v1"; wall_time is omitted when with_time is false
std::string report_json(const Report& r, bool with_time = true);
std::string report_table(const Report& r, bool color);

bool valid_suite(const std::string& s);

}  // namespace gsp
