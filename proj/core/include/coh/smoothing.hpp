/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "coh/types.hpp"

#include <cstdint>

namespace coh {

// Smoothing lemma (used throughout this module): over the pure-state fidelity
// ball the optimum is attained by a state sharing the phases of the input,
// because the pure-state fidelity is the modulus of the overlap (maximized by
// aligned phases) while the dephased distribution depends only on moduli. The
// solver therefore works entirely on dephased distributions.

struct CappedFidelityResult {
  double fidelity = 0.0;       // max of sum mult*sqrt(p*q) subject to q <= cap
  GroupedDistribution q_star;  // the maximizer, grouped
  double scaling_t = 0.0;      // uncapped entries satisfy q = t * p; 0 if none
  double capped_mass = 0.0;    // total q-mass sitting at the cap
};

/// Maximize sum_i sqrt(p_i q_i) over distributions q with every q_i <= cap,
/// on an ambient outcome space of size ambient_dim (outcomes where p is zero
/// may receive mass up to the cap with zero fidelity contribution).
/// ambient_dim defaults to the support size of p. The optimum has the exact
/// waterfilling form q_i = min(cap, t * p_i), found by a descending scan over
/// groups; no iteration beyond the scan.
/// Throws if cap * ambient_dim < 1 - 1e-12 (infeasible).
CappedFidelityResult max_fidelity_capped(const GroupedDistribution& p, double cap,
                                         double ambient_dim = 0.0);

/// Index-resolved waterfilling: q per basis index for a probability vector in
/// input-index order. Mass the support cannot hold (all entries at cap) is
/// laid on zero-probability indices, cap-first in index order.
std::vector<double> capped_waterfill_indexed(const std::vector<double>& p, double cap);

struct SmoothedMinEntropyResult {
  double epsilon = 0.0;
  std::int64_t best_m = 1;           // largest integer M with fid^2(1/M) >= 1 - eps
  double continuous_value_bits = 0;  // log2 of the largest real m on the ball boundary
  CappedFidelityResult witness;      // solution at cap 1/best_m
};

/// Smoothed min-entropy over the pure fidelity ball of a state with dephased
/// distribution p. Feasibility comparisons carry a 1e-9 slack in favor of
/// feasibility so exact-boundary cases count as achievable. max_m bounds the
/// integer search (defaults to ambient_dim).
SmoothedMinEntropyResult smoothed_min_entropy_pure(const GroupedDistribution& p, double epsilon,
                                                   double ambient_dim = 0.0,
                                                   std::int64_t max_m = 0);

/// Brute-force simplex-grid verification oracle: exhaustive grid over
/// candidate dephased distributions q (phases aligned), returning the best
/// s_min(q) among q with fidelity^2 >= 1 - eps. Supports ambient dimension
/// up to 3. Independent of the waterfilling path.
double oracle_smoothed_min_entropy(const GroupedDistribution& p, double epsilon,
                                   double grid_step, int ambient_dim = 0);

}  // namespace coh
