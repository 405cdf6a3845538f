/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "coh/random.hpp"

#include <cmath>

namespace coh {

namespace {

ComplexMatrix gaussian_matrix(int rows, int cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      g(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  return g;
}

// QR-based orthonormal columns with the phase convention diag(R) > 0, which
// makes the output Haar-distributed and deterministic given the input.
ComplexMatrix orthonormal_columns(const ComplexMatrix& g) {
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(g.rows(), g.cols());
  ComplexMatrix r = qr.matrixQR().topRows(g.cols()).triangularView<Eigen::Upper>();
  for (int j = 0; j < g.cols(); ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace

PureState random_pure_state(int dim, Rng& rng) {
  if (dim < 1) throw InvariantError("random_pure_state.dim", "must be positive");
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
  v /= v.norm();
  return PureState(std::move(v));
}

DensityOperator random_density(int dim, int rank, Rng& rng) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw InvariantError("random_density.rank", "requires 1 <= rank <= dim");
  }
  ComplexMatrix vecs = orthonormal_columns(gaussian_matrix(dim, rank, rng));
  // Uniform spectrum on the simplex via normalized exponentials.
  RealVector spec(rank);
  double total = 0.0;
  for (int k = 0; k < rank; ++k) {
    spec(k) = -std::log(std::max(rng.uniform(), 1e-300));
    total += spec(k);
  }
  spec /= total;
  ComplexMatrix rho = vecs * spec.asDiagonal() * vecs.adjoint();
  return DensityOperator(std::move(rho));
}

ComplexMatrix random_isometry(int m, int r, Rng& rng) {
  if (m < 1 || r < 1 || r > m) {
    throw InvariantError("random_isometry.dims", "requires 1 <= r <= m");
  }
  return orthonormal_columns(gaussian_matrix(m, r, rng));
}

ComplexMatrix random_hermitian(int dim, Rng& rng) {
  ComplexMatrix g = gaussian_matrix(dim, dim, rng);
  return 0.5 * (g + g.adjoint().eval());
}

ComplexMatrix random_effect(int dim, Rng& rng) {
  ComplexMatrix h = random_hermitian(dim, rng);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  const double span = std::max(hi - lo, 1e-12);
  RealVector squashed = (es.eigenvalues().array() - lo) / span;
  return es.eigenvectors() * squashed.asDiagonal() * es.eigenvectors().adjoint();
}

PureEnsemble ensemble_from_isometry(const RealVector& eigvals,
                                    const std::vector<PureState>& eigvecs,
                                    const ComplexMatrix& v) {
  const int r = static_cast<int>(eigvals.size());
  const int m = static_cast<int>(v.rows());
  if (static_cast<int>(eigvecs.size()) != r || v.cols() != r) {
    throw InvariantError("ensemble_from_isometry.inputs", "inconsistent rank");
  }
  double total = 0.0;
  for (int k = 0; k < r; ++k) {
    if (eigvals(k) < -kTraceTol) {
      throw InvariantError("ensemble_from_isometry.eigvals", "spectrum must be nonnegative");
    }
    total += eigvals(k);
  }
  if (std::abs(total - 1.0) > kTraceTol) {
    throw InvariantError("ensemble_from_isometry.eigvals", "spectrum must sum to 1 within 1e-9");
  }
  const double iso_dev = (v.adjoint() * v - ComplexMatrix::Identity(r, r)).cwiseAbs().maxCoeff();
  if (iso_dev > kTraceTol) {
    throw InvariantError("ensemble_from_isometry.V",
                         "V^dag V deviates from identity by " + std::to_string(iso_dev));
  }
  const int dim = eigvecs.front().dim();
  std::vector<EnsembleMember> members;
  members.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    ComplexVector vec = ComplexVector::Zero(dim);
    for (int k = 0; k < r; ++k) {
      vec += v(i, k) * std::sqrt(std::max(eigvals(k), 0.0)) * eigvecs[static_cast<std::size_t>(k)].amplitudes();
    }
    const double w = vec.squaredNorm();
    if (w <= kZeroDiagTol) continue;  // zero-weight member, skip
    members.push_back({w, PureState(vec / std::sqrt(w))});
  }
  return PureEnsemble(std::move(members));
}

}  // namespace coh
