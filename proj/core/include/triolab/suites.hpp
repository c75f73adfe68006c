#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace triolab {

struct SuiteOptions {
  int workers = 1;
  std::uint64_t seed = 20240601;
  int p = 0;             // cauchy-davenport: restrict to one prime
  long cases = 10000;    // randomized suites: cases per identity
  int max_order = 0;     // 0: the suite's own bound
};

struct SuiteResult {
  std::string suite;
  int criterion = 0;
  bool pass = false;
  long checked = 0;
  std::map<std::string, long> counts;
  // first failure, as key/value pairs for machine-readable output
  std::map<std::string, std::string> witness;
  std::string detail;
};

struct SuiteInfo {
  std::string name;
  int criterion;
  std::string summary;
};
const std::vector<SuiteInfo>& suite_list();
bool has_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

// Small-cut census constants for the catalog graphs (outcome name -> count).
const std::map<std::string, std::map<std::string, long>>& frozen_cut_census();

}  // namespace triolab
