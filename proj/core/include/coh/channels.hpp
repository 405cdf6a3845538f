/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "coh/types.hpp"

#include <cstdint>
#include <vector>

namespace coh {

/// Trace-preserving channel whose Kraus operators each carry at most one
/// nonzero entry per column (strictly incoherent form).
struct IncoherentChannel {
  int input_dim = 0;
  int output_dim = 0;
  std::vector<ComplexMatrix> kraus;  // each output_dim x input_dim
};

/// Fractional assignment of input basis indices (rows) to output bins
/// (columns): each column sums to 1, row i sums to M * p_i.
struct BinAssignment {
  RealMatrix w;  // d x M
};

struct BirkhoffTerm {
  double weight = 0.0;
  std::vector<int> assignment;  // assignment[m] = input index feeding bin m
};

/// True iff every partial sum of q (sorted descending) dominates the
/// corresponding partial sum of p, with 1e-12 slack.
bool check_majorization(const GroupedDistribution& q, const GroupedDistribution& p);

/// Lays the probabilities end-to-end on [0,1] in input-index order and cuts at
/// multiples of 1/M; W[i,m] = M * (overlap of segment i with bin m).
/// Requires max_i p_i <= 1/M + 1e-12.
BinAssignment ribbon_partition(const std::vector<double>& p, int m);

/// Birkhoff-von Neumann decomposition of the doubly stochastic extension of W
/// (padded with slack columns by a second ribbon pass). Terms reconstruct W:
/// sum_j weight_j [assignment_j hits (i,m)] = W[i,m] within 1e-9.
std::vector<BirkhoffTerm> birkhoff_decompose(const BinAssignment& w);

/// Explicit strictly incoherent channel with Lambda(psi) = Phi_M, built from
/// the ribbon partition and its Birkhoff decomposition.
/// Requires max_i |psi_i|^2 <= 1/M + 1e-12.
IncoherentChannel build_concentration_channel(const PureState& psi, int m);

/// Kraus completeness within 1e-9 and at most one nonzero (>1e-12) entry per
/// column of every Kraus operator.
bool certify_incoherent(const IncoherentChannel& ch);

/// sum_j K_j rho K_j^dag.
DensityOperator apply_channel(const IncoherentChannel& ch, const DensityOperator& rho);

struct ConcentrationOutcome {
  std::int64_t m = 1;
  IncoherentChannel channel;
  double achieved_fidelity_sq = 0.0;
};

/// Smoothing followed by channel synthesis: picks the best integer M on the
/// epsilon-ball, builds the channel for the smoothing witness, and measures
/// the output fidelity to Phi_M on the original state.
ConcentrationOutcome concentrate(const PureState& psi, double epsilon);

}  // namespace coh
