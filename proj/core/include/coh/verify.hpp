/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "coh/random.hpp"

#include <string>
#include <vector>

namespace coh {

struct VerifyResult {
  std::string suite;
  int trials = 0;
  int violations = 0;
  std::vector<std::string> messages;  // first few failures, for diagnostics

  bool ok() const { return violations == 0; }
};

/// Randomized inequality suites for the two operator lemmas.
VerifyResult verify_lemmas(int trials, int max_dim, Rng& rng);

/// Waterfilling solver against the brute-force simplex-grid oracle.
VerifyResult verify_smoothing_oracle(int trials, int max_dim, Rng& rng);

/// Channel synthesis: certification, exact transformation, Birkhoff residual.
VerifyResult verify_channels(int trials, int max_dim, Rng& rng);

/// Rate bound ordering, constructive achievability, epsilon monotonicity.
VerifyResult verify_rates(int trials, int max_dim, Rng& rng);

VerifyResult run_suite(const std::string& name, int trials, int max_dim, Rng& rng);

}  // namespace coh
