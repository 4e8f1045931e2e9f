#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wonderk/fan.hpp"
#include "wonderk/report.hpp"
#include "wonderk/steinberg.hpp"

namespace wonderk {

struct SuiteOptions {
  int samples = 100;        // random members / non-members / SR elements
  std::uint32_t seed = 1;   // all randomness is seeded
  std::optional<Fan> user_fan; // extra subdivision of F_+ for toric-decomp
};

/// Names accepted by run_suite, in run order.
const std::vector<std::string> &suite_names();
/// The suites run when none is named: all of them, minus the table suite
/// above kTableLimit.
std::vector<std::string> default_suites(const WeylGroup &W);

/// Runs one named verification suite.  Throws ValidationError("UnknownSuite").
Report run_suite(const std::string &name, const SteinbergSystem &S,
                 const SuiteOptions &options = {});

/// Basis pairs checked by the product suites: all pairs when |W| <= 6, else
/// ten seeded random pairs.
std::vector<std::pair<ElemId, ElemId>> product_pairs(const WeylGroup &W, std::uint32_t seed);

} // namespace wonderk
