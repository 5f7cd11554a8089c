#ifndef VOGANKIT_VERIFY_HPP
#define VOGANKIT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vogankit/loopalg.hpp"

namespace vgk {

struct IdentityResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string witness;  // description of the first failing instance
  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::string model;
  int twist = 0;
  int window = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityResult> results;
  bool ok() const {
    for (const auto& r : results)
      if (!r.passed()) return false;
    return !results.empty();
  }
};

/// Randomized exact checks of the loop realization: grading closure,
/// skew-symmetry, the super Jacobi identity with central terms, invariance
/// and supersymmetry of the form, and the c/d pairing.  Deterministic for a
/// fixed seed.
VerifyReport verify_loop_model(const std::string& model_name, int trials, std::uint64_t seed,
                               int window = 3);

std::string verify_report_to_json(const VerifyReport& rep);

}  // namespace vgk

#endif
