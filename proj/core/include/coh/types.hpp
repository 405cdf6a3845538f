/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Numerical tolerances used throughout. These are part of the library
// contract, not implementation detail.
inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPureNormTol = 1e-12;
inline constexpr double kGroupingTol = 1e-12;
inline constexpr double kZeroDiagTol = 1e-15;
inline constexpr double kSupportCutoff = 1e-10;
inline constexpr double kFeasibilitySlack = 1e-9;
inline constexpr double kColumnSparsityTol = 1e-12;

class InvariantError : public std::runtime_error {
 public:
  InvariantError(std::string field, std::string invariant)
      : std::runtime_error(field + ": " + invariant),
        field_(std::move(field)),
        invariant_(std::move(invariant)) {}
  const std::string& field() const { return field_; }
  const std::string& invariant() const { return invariant_; }

 private:
  std::string field_;
  std::string invariant_;
};

/// Unit-trace positive semidefinite operator in the incoherent basis.
/// The stored matrix is symmetrized ((A + A^dag)/2) on construction.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix mat);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& matrix() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

/// Normalized amplitude vector in the incoherent basis.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes);

  int dim() const { return static_cast<int>(amps_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }
  Complex amplitude(int i) const { return amps_(i); }

  DensityOperator projector() const;
  /// |amplitude|^2 per basis index, in index order.
  std::vector<double> probabilities() const;

 private:
  ComplexVector amps_;
};

struct ProbabilityGroup {
  double value = 0.0;        // probability of each outcome in the group
  double multiplicity = 0.0; // outcome count; integral, stored as double so
                             // that n-copy product distributions fit
};

/// Probability distribution stored as (value, multiplicity) pairs sorted by
/// value descending. Zero values are dropped; equal values within 1e-12 are
/// merged. This stays compact for product distributions over many copies.
class GroupedDistribution {
 public:
  GroupedDistribution() = default;  // empty distribution
  static GroupedDistribution from_values(const std::vector<double>& values);
  static GroupedDistribution from_groups(std::vector<ProbabilityGroup> groups);

  const std::vector<ProbabilityGroup>& groups() const { return groups_; }
  std::size_t group_count() const { return groups_.size(); }
  double total_multiplicity() const;
  double total_mass() const;
  double max_value() const { return groups_.empty() ? 0.0 : groups_.front().value; }

 private:
  std::vector<ProbabilityGroup> groups_;
};

struct EnsembleMember {
  double weight = 0.0;
  PureState state;
};

/// Weighted list of pure states of a common dimension; weights sum to 1.
class PureEnsemble {
 public:
  explicit PureEnsemble(std::vector<EnsembleMember> members);

  const std::vector<EnsembleMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  int dim() const { return members_.front().state.dim(); }

  /// Sum of w_i |psi_i><psi_i|.
  DensityOperator mixture() const;

 private:
  std::vector<EnsembleMember> members_;
};

}  // namespace coh
