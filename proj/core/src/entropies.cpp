/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "coh/entropies.hpp"

#include "coh/linalg.hpp"

#include <cmath>
#include <limits>

namespace coh {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

/// Support projector with eigenvalue cutoff 1e-10.
ComplexMatrix support_projector(const ComplexMatrix& a) {
  HermitianEig eig = hermitian_eig(a);
  ComplexMatrix proj = ComplexMatrix::Zero(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > kSupportCutoff) {
      proj += eig.vectors.col(i) * eig.vectors.col(i).adjoint();
    }
  }
  return proj;
}

/// A^p on the support of A (eigenvalues below the support cutoff map to 0).
ComplexMatrix support_power(const HermitianEig& eig, double p) {
  RealVector powered(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double v = eig.values(i);
    powered(i) = v > kSupportCutoff ? std::pow(v, p) : 0.0;
  }
  return eig.vectors * powered.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace

double shannon_entropy(const GroupedDistribution& p) {
  double h = 0.0;
  for (const auto& g : p.groups()) h -= g.multiplicity * xlog2x(g.value);
  return std::max(h, 0.0);
}

double von_neumann(const DensityOperator& rho) {
  HermitianEig eig = hermitian_eig(rho.matrix());
  double h = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) h -= xlog2x(std::max(eig.values(i), 0.0));
  return std::max(h, 0.0);
}

double renyi_relative(double alpha, const DensityOperator& rho, const DensityOperator& sigma,
                      const ComplexMatrix& p) {
  if (alpha <= 0.0 || alpha == 1.0 || !std::isfinite(alpha)) {
    throw InvariantError("renyi_relative.alpha", "must lie in (0, inf) excluding 1");
  }
  if (rho.dim() != sigma.dim() || p.rows() != rho.dim() || p.cols() != rho.dim()) {
    throw InvariantError("renyi_relative.inputs", "dimension mismatch");
  }
  HermitianEig p_eig = hermitian_eig(p);
  if (p_eig.values.minCoeff() < -kHermitianTol || p_eig.values.maxCoeff() > 1.0 + kHermitianTol) {
    throw InvariantError("renyi_relative.P", "must satisfy 0 <= P <= I within 1e-9");
  }
  HermitianEig rho_eig = hermitian_eig(rho.matrix());
  HermitianEig sig_eig = hermitian_eig(sigma.matrix());
  if (alpha > 1.0) {
    // sigma^(1-alpha) blows up off the support; rho must live inside it.
    const ComplexMatrix sig_proj = support_projector(sigma.matrix());
    const ComplexMatrix leak = rho.matrix() - sig_proj * rho.matrix() * sig_proj;
    if (leak.cwiseAbs().maxCoeff() > 1e-7) {
      throw InvariantError("renyi_relative.supports",
                           "alpha > 1 requires supp(rho) within supp(sigma); "
                           "rho has weight outside the support of sigma");
    }
  }
  const ComplexMatrix rho_a = support_power(rho_eig, alpha);
  const ComplexMatrix sig_b = support_power(sig_eig, 1.0 - alpha);
  const ComplexMatrix sqrt_p = matrix_sqrt_psd(p);
  const double tr = (sqrt_p * rho_a * sqrt_p * sig_b).trace().real();
  if (tr <= 0.0) {
    throw InvariantError("renyi_relative.supports",
                         "Tr[sqrt(P) rho^a sqrt(P) sigma^(1-a)] is nonpositive; "
                         "undefined support combination");
  }
  return std::log2(tr) / (alpha - 1.0);
}

double s0_relative(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw InvariantError("s0_relative.inputs", "dimension mismatch");
  }
  const ComplexMatrix proj = support_projector(rho.matrix());
  const double overlap = (proj * sigma.matrix()).trace().real();
  if (overlap <= 0.0) return std::numeric_limits<double>::infinity();
  return -std::log2(overlap);
}

double c_min(const DensityOperator& rho) {
  const ComplexMatrix proj = support_projector(rho.matrix());
  double best = 0.0;
  for (int i = 0; i < rho.dim(); ++i) best = std::max(best, proj(i, i).real());
  if (best <= 0.0) return std::numeric_limits<double>::infinity();
  return std::max(-std::log2(best), 0.0);
}

double s_min(const GroupedDistribution& p) {
  return std::max(-std::log2(p.max_value()), 0.0);
}

double c_r(const DensityOperator& rho) {
  return std::max(shannon_entropy(dephase(rho)) - von_neumann(rho), 0.0);
}

double d_a_closed_form(const DensityOperator& rho) { return shannon_entropy(dephase(rho)); }

DensityOperator qc_state(const PureEnsemble& ensemble) {
  const int d = ensemble.dim();
  const int m = static_cast<int>(ensemble.size());
  ComplexMatrix block = ComplexMatrix::Zero(d * m, d * m);
  for (int i = 0; i < m; ++i) {
    const auto& member = ensemble.members()[static_cast<std::size_t>(i)];
    block.block(i * d, i * d, d, d) =
        member.weight * (member.state.amplitudes() * member.state.amplitudes().adjoint());
  }
  return DensityOperator(std::move(block));
}

}  // namespace coh
