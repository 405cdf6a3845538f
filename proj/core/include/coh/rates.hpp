/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "coh/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coh {

struct RateReport {
  double epsilon = 0.0;
  std::int64_t m_achievable = 1;
  double rate_lower_bits = 0.0;    // log2(m_achievable)
  double rate_upper_bits = 0.0;    // continuous smoothed value at 2*epsilon
  double smoothed_value_bits = 0;  // continuous smoothed value at epsilon
  std::string witness;
  double channel_fidelity_sq = -1.0;  // measured achievability; <0 if not built
  std::uint64_t seed = 0;
  int restarts = 0;
  int copies = 1;
};

/// Two-sided one-shot pure-state concentration rate: integer lower bound from
/// smoothing at epsilon, continuous upper bound from smoothing at 2*epsilon,
/// plus the measured fidelity of the constructed achieving channel.
/// Requires 0 <= epsilon < 0.5.
RateReport pure_rate(const PureState& psi, double epsilon);

/// Average-rate feasibility: sum_i w_i * maxfid^2(p_i, 1/M) >= 1 - epsilon
/// (per-member optima are independent, so the weighted-average ball
/// constraint separates).
bool ensemble_feasible(const PureEnsemble& ensemble, std::int64_t m, double epsilon);

/// log2 of the largest real m whose weighted-average capped fidelity^2
/// reaches 1 - epsilon.
double ensemble_continuous_value(const PureEnsemble& ensemble, double epsilon);

/// Two-sided ensemble concentration rate; also measures per-member achieving
/// channels at the reported M (weighted fidelity^2 recorded in the report).
RateReport ensemble_rate(const PureEnsemble& ensemble, double epsilon);

/// min_i s_min(dephase(psi_i)).
double f_min_delta(const PureEnsemble& ensemble);

/// Certified achievable lower bound on the one-shot coherence of assistance:
/// best ensemble rate over the eigen-ensemble, a Fourier-slice ensemble, and
/// `restarts` random isometries, each refined by Givens-rotation hill
/// climbing on the isometry. The 2*epsilon upper bound is reported for the
/// best ensemble found only (ensemble-conditional).
RateReport assisted_rate(const DensityOperator& rho, double epsilon, int members, int restarts,
                         std::uint64_t seed);

struct SweepRow {
  int n = 0;
  double rate_bits = 0.0;
  double rate_per_copy = 0.0;
  double target_avg_bits = 0.0;  // sum_i w_i S(dephase(psi_i))
  double target_da_bits = 0.0;   // S(dephase(mixture))
};

/// Achievable rate of the product ensemble E^(x)n for n = 1..n_max, grouped
/// by type class with multinomial weights; product distributions stay in
/// grouped form (outcome values with multiplicities) and are accumulated in
/// log space. Throws if the total group count would exceed 1e6.
std::vector<SweepRow> ncopy_sweep(const PureEnsemble& ensemble, double epsilon, int n_max);

}  // namespace coh
