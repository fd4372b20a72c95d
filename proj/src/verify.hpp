#pragma once

#include <string>
#include <vector>

#include "curvature.hpp"

namespace su2curv {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failure data, or a short note
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  int failures() const;
};

// Runs every identity the engine knows about on one instance: structure
// equation, connection and curvature reassemblies, the frame-quantity Ricci
// against the Koszul oracle, the pullback formulas, the torsion-form scalar
// and Ricci formulas, class-specialized scalar values, and the instance-level
// implications between the special classes.
VerificationReport verify_all(const Coframe5& cf, const Conventions& cv = {});

}  // namespace su2curv
