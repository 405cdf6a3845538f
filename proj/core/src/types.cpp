/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "coh/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coh {

DensityOperator::DensityOperator(ComplexMatrix mat) {
  if (mat.rows() == 0 || mat.rows() != mat.cols()) {
    throw InvariantError("DensityOperator.matrix", "must be square and nonempty");
  }
  if (!mat.allFinite()) {
    throw InvariantError("DensityOperator.matrix", "entries must be finite");
  }
  const double herm_dev = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol) {
    throw InvariantError("DensityOperator.matrix",
                         "Hermiticity deviation " + std::to_string(herm_dev) +
                             " exceeds 1e-9");
  }
  mat_ = 0.5 * (mat + mat.adjoint().eval());
  const double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw InvariantError("DensityOperator.matrix",
                         "trace " + std::to_string(tr) + " differs from 1 beyond 1e-9");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kHermitianTol) {
    throw InvariantError("DensityOperator.matrix",
                         "negative eigenvalue " +
                             std::to_string(es.eigenvalues().minCoeff()) +
                             " below -1e-9");
  }
}

PureState::PureState(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) {
    throw InvariantError("PureState.amplitudes", "dimension must be positive");
  }
  if (!amps_.allFinite()) {
    throw InvariantError("PureState.amplitudes", "entries must be finite");
  }
  const double norm_sq = amps_.squaredNorm();
  if (std::abs(norm_sq - 1.0) > kPureNormTol) {
    throw InvariantError("PureState.amplitudes",
                         "squared norm " + std::to_string(norm_sq) +
                             " differs from 1 beyond 1e-12");
  }
}

DensityOperator PureState::projector() const {
  return DensityOperator(amps_ * amps_.adjoint());
}

std::vector<double> PureState::probabilities() const {
  std::vector<double> p(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) p[static_cast<std::size_t>(i)] = std::norm(amps_(i));
  return p;
}

GroupedDistribution GroupedDistribution::from_values(const std::vector<double>& values) {
  std::vector<double> kept;
  kept.reserve(values.size());
  for (double v : values) {
    if (!std::isfinite(v) || v < -kZeroDiagTol) {
      throw InvariantError("GroupedDistribution.values", "values must be nonnegative and finite");
    }
    if (v > kZeroDiagTol) kept.push_back(v);
  }
  std::sort(kept.begin(), kept.end(), std::greater<double>());
  std::vector<ProbabilityGroup> groups;
  for (double v : kept) {
    if (!groups.empty() && groups.back().value - v <= kGroupingTol) {
      groups.back().multiplicity += 1.0;
    } else {
      groups.push_back({v, 1.0});
    }
  }
  return from_groups(std::move(groups));
}

GroupedDistribution GroupedDistribution::from_groups(std::vector<ProbabilityGroup> groups) {
  double mass = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& g : groups) {
    if (g.value <= 0.0 || !std::isfinite(g.value)) {
      throw InvariantError("GroupedDistribution.groups", "values must be strictly positive");
    }
    if (g.multiplicity < 1.0) {
      throw InvariantError("GroupedDistribution.groups", "multiplicities must be positive");
    }
    if (g.value > prev + kGroupingTol) {
      throw InvariantError("GroupedDistribution.groups", "values must be sorted descending");
    }
    prev = g.value;
    mass += g.value * g.multiplicity;
  }
  if (std::abs(mass - 1.0) > kTraceTol) {
    throw InvariantError("GroupedDistribution.groups",
                         "total mass " + std::to_string(mass) + " differs from 1 beyond 1e-9");
  }
  GroupedDistribution d;
  d.groups_ = std::move(groups);
  return d;
}

double GroupedDistribution::total_multiplicity() const {
  double m = 0.0;
  for (const auto& g : groups_) m += g.multiplicity;
  return m;
}

double GroupedDistribution::total_mass() const {
  double m = 0.0;
  for (const auto& g : groups_) m += g.value * g.multiplicity;
  return m;
}

PureEnsemble::PureEnsemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
  if (members_.empty()) {
    throw InvariantError("PureEnsemble.members", "must be nonempty");
  }
  const int d = members_.front().state.dim();
  double total = 0.0;
  for (const auto& m : members_) {
    if (m.state.dim() != d) {
      throw InvariantError("PureEnsemble.members", "all states must share one dimension");
    }
    if (m.weight <= 0.0 || m.weight > 1.0 + kTraceTol) {
      throw InvariantError("PureEnsemble.members", "weights must lie in (0, 1]");
    }
    total += m.weight;
  }
  if (std::abs(total - 1.0) > kTraceTol) {
    throw InvariantError("PureEnsemble.members",
                         "weights sum to " + std::to_string(total) + ", expected 1 within 1e-9");
  }
}

DensityOperator PureEnsemble::mixture() const {
  ComplexMatrix acc = ComplexMatrix::Zero(dim(), dim());
  for (const auto& m : members_) {
    acc += m.weight * (m.state.amplitudes() * m.state.amplitudes().adjoint());
  }
  return DensityOperator(std::move(acc));
}

}  // namespace coh
