#pragma once

#include <string>
#include <vector>

namespace bircalc {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed;
};

/// Recomputes the published numeric values (degree table, anticanonical
/// degrees, Riemann-Roch dimensions, ring profile, blowup arithmetic, curve
/// bounds and the word-level non-innerness witness).
std::vector<CheckResult> run_verification();

}  // namespace bircalc
