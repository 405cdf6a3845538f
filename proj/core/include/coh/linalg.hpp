/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "coh/types.hpp"

namespace coh {

struct HermitianEig {
  RealVector values;
  ComplexMatrix vectors;
};

/// Eigendecomposition after symmetrizing (A + A^dag)/2. Throws if the input
/// deviates from Hermitian by more than 1e-9.
HermitianEig hermitian_eig(const ComplexMatrix& a);

/// Square root of a PSD matrix. Eigenvalues in [-1e-9, 0) are clipped to 0;
/// anything lower throws.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a);

/// Diagonal of rho as a grouped distribution: entries below 1e-15 dropped,
/// equal entries (within 1e-12) merged.
GroupedDistribution dephase(const DensityOperator& rho);

/// Uhlmann fidelity Tr sqrt(sqrt(sigma) rho sqrt(sigma)), in [0, 1].
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& a);

/// Sum of positive eigenvalues of a Hermitian matrix, Tr (A)_+.
double positive_part_trace(const ComplexMatrix& a);

/// sqrt(Lambda) rho sqrt(Lambda) for an effect operator 0 <= Lambda <= I.
ComplexMatrix operator_sqrt_sandwich(const ComplexMatrix& lambda, const DensityOperator& rho);

/// Amplitudes 1/sqrt(M) on the first M basis entries of a dim-dimensional state.
PureState maximally_coherent(int m, int dim);

}  // namespace coh
