#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace wonderk {

struct CheckResult {
  std::string check;    // e.g. "prop1.8(1)"
  std::string instance; // e.g. "I=[1],v=s1"
  bool pass = false;
  std::string detail; // counterexample data on failure
};

struct Report {
  std::string suite;
  std::string type;
  std::vector<CheckResult> checks;

  void add(std::string check, std::string instance, bool pass, std::string detail = {}) {
    checks.push_back({std::move(check), std::move(instance), pass, std::move(detail)});
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const auto &c) { return !c.pass; }));
  }
  bool all_pass() const { return failures() == 0; }
};

} // namespace wonderk
