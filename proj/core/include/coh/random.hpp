/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "coh/types.hpp"

#include <cstdint>
#include <random>

namespace coh {

/// Seedable generator threaded explicitly through all randomized operations.
/// No global state anywhere in the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Haar-distributed pure state (normalized complex Gaussian vector).
PureState random_pure_state(int dim, Rng& rng);

/// Random density operator of the given rank: random orthonormal eigenvectors
/// with a random spectrum on the rank-simplex.
DensityOperator random_density(int dim, int rank, Rng& rng);

/// m x r matrix with V^dag V = I_r, Haar-distributed (QR of a Gaussian).
ComplexMatrix random_isometry(int m, int r, Rng& rng);

/// Random Hermitian matrix with independent Gaussian entries.
ComplexMatrix random_hermitian(int dim, Rng& rng);

/// Random effect operator 0 <= P <= I (random Hermitian squashed into [0,1]
/// by rescaling its spectrum).
ComplexMatrix random_effect(int dim, Rng& rng);

/// The ensemble induced by measuring the purifying system: member i has
/// unnormalized vector sum_k V[i,k] sqrt(lambda_k) e_k and weight equal to its
/// squared norm. The mixture of the result equals sum_k lambda_k e_k e_k^dag.
PureEnsemble ensemble_from_isometry(const RealVector& eigvals,
                                    const std::vector<PureState>& eigvecs,
                                    const ComplexMatrix& v);

}  // namespace coh
