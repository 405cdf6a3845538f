/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "coh/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace coh {

namespace {

void require_hermitian(const ComplexMatrix& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw InvariantError(who, "matrix must be square");
  }
  const double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermitianTol) {
    throw InvariantError(who, "Hermiticity deviation " + std::to_string(dev) + " exceeds 1e-9");
  }
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& a) {
  require_hermitian(a, "hermitian_eig.input");
  const ComplexMatrix sym = 0.5 * (a + a.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a) {
  HermitianEig eig = hermitian_eig(a);
  RealVector roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    double v = eig.values(i);
    if (v < -kHermitianTol) {
      throw InvariantError("matrix_sqrt_psd.input",
                           "eigenvalue " + std::to_string(v) + " below -1e-9");
    }
    roots(i) = std::sqrt(std::max(v, 0.0));
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

GroupedDistribution dephase(const DensityOperator& rho) {
  std::vector<double> diag(static_cast<std::size_t>(rho.dim()));
  for (int i = 0; i < rho.dim(); ++i) {
    diag[static_cast<std::size_t>(i)] = rho.matrix()(i, i).real();
  }
  return GroupedDistribution::from_values(diag);
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw InvariantError("fidelity.inputs", "dimension mismatch");
  }
  const ComplexMatrix root = matrix_sqrt_psd(sigma.matrix());
  const ComplexMatrix sandwich = root * rho.matrix() * root;
  HermitianEig eig = hermitian_eig(sandwich);
  // Eigenvalues at the numerical noise floor (~1e-16 for unit-trace inputs)
  // would contribute ~1e-8 through the square root; drop them so pure-state
  // fidelities agree with the overlap modulus to 1e-12.
  const double noise_floor = 1e-14 * std::max(sandwich.trace().real(), 1.0);
  double f = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > noise_floor) f += std::sqrt(eig.values(i));
  }
  return std::clamp(f, 0.0, 1.0);
}

double trace_norm(const ComplexMatrix& a) {
  require_hermitian(a, "trace_norm.input");
  HermitianEig eig = hermitian_eig(a);
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) s += std::abs(eig.values(i));
  return s;
}

double positive_part_trace(const ComplexMatrix& a) {
  require_hermitian(a, "positive_part_trace.input");
  HermitianEig eig = hermitian_eig(a);
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) s += std::max(eig.values(i), 0.0);
  return s;
}

ComplexMatrix operator_sqrt_sandwich(const ComplexMatrix& lambda, const DensityOperator& rho) {
  require_hermitian(lambda, "operator_sqrt_sandwich.lambda");
  if (lambda.rows() != rho.dim()) {
    throw InvariantError("operator_sqrt_sandwich.inputs", "dimension mismatch");
  }
  HermitianEig eig = hermitian_eig(lambda);
  if (eig.values.minCoeff() < -kHermitianTol || eig.values.maxCoeff() > 1.0 + kHermitianTol) {
    throw InvariantError("operator_sqrt_sandwich.lambda", "must satisfy 0 <= Lambda <= I within 1e-9");
  }
  const ComplexMatrix root = matrix_sqrt_psd(lambda);
  return root * rho.matrix() * root;
}

PureState maximally_coherent(int m, int dim) {
  if (m < 1 || dim < m) {
    throw InvariantError("maximally_coherent.M", "requires 1 <= M <= dim");
  }
  ComplexVector amps = ComplexVector::Zero(dim);
  const double a = 1.0 / std::sqrt(static_cast<double>(m));
  for (int i = 0; i < m; ++i) amps(i) = a;
  return PureState(std::move(amps));
}

}  // namespace coh
