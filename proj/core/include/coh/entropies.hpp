/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "coh/types.hpp"

namespace coh {

// All entropies are in bits (log base 2).

/// -sum multiplicity * p * log2(p); nonnegative.
double shannon_entropy(const GroupedDistribution& p);

/// Shannon entropy of the spectrum.
double von_neumann(const DensityOperator& rho);

/// (1/(alpha-1)) log2 Tr[sqrt(P) rho^alpha sqrt(P) sigma^(1-alpha)] for
/// alpha in (0, inf) \ {1}. Requires supp(rho) within supp(sigma) when the
/// sigma exponent is negative (alpha > 1).
double renyi_relative(double alpha, const DensityOperator& rho, const DensityOperator& sigma,
                      const ComplexMatrix& p);

/// Order-0 relative Renyi entropy -log2 Tr(Pi_rho sigma); returns +infinity
/// when the supports are disjoint (serialized as an "unbounded" sentinel).
double s0_relative(const DensityOperator& rho, const DensityOperator& sigma);

/// Min-entropy of coherence: min over incoherent sigma of s0_relative.
/// Tr(Pi_rho sigma) is linear in sigma over the simplex of diagonal states,
/// so the minimum sits at a basis point mass on the largest diagonal entry of
/// the support projector; the closed form is -log2 max_i (Pi_rho)_{ii}.
double c_min(const DensityOperator& rho);

/// -log2(largest probability value).
double s_min(const GroupedDistribution& p);

/// Relative entropy of coherence S(dephase(rho)) - S(rho); nonnegative.
double c_r(const DensityOperator& rho);

/// Asymptotic coherence of assistance, S(dephase(rho)).
double d_a_closed_form(const DensityOperator& rho);

/// Block-diagonal quantum-classical state sum_i w_i psi_i (x) |i><i| of
/// dimension dim * member_count.
DensityOperator qc_state(const PureEnsemble& ensemble);

}  // namespace coh
