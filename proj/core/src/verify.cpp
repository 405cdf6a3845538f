/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "coh/verify.hpp"

#include "coh/channels.hpp"
#include "coh/entropies.hpp"
#include "coh/linalg.hpp"
#include "coh/rates.hpp"
#include "coh/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace coh {

namespace {

void record(VerifyResult& res, bool ok, const std::string& what) {
  if (ok) return;
  ++res.violations;
  if (res.messages.size() < 10) res.messages.push_back(what);
}

int dim_for_trial(int trial, int max_dim, Rng& rng) {
  (void)trial;
  return 2 + static_cast<int>(rng.uniform() * (max_dim - 1));
}

}  // namespace

VerifyResult verify_lemmas(int trials, int max_dim, Rng& rng) {
  VerifyResult res;
  res.suite = "lemmas";
  for (int t = 0; t < trials; ++t) {
    const int d = dim_for_trial(t, max_dim, rng);
    {
      const ComplexMatrix a = random_hermitian(d, rng);
      const ComplexMatrix b = random_hermitian(d, rng);
      const ComplexMatrix p = random_effect(d, rng);
      const ComplexMatrix diff = a - b;
      const double lhs = (p * diff).trace().real();
      const double mid = positive_part_trace(diff);
      const double rhs = trace_norm(diff);
      record(res, lhs <= mid + 1e-9 && mid <= rhs + 1e-9,
             "operator-difference inequality violated at trial " + std::to_string(t));
    }
    {
      const int rank = 1 + static_cast<int>(rng.uniform() * d);
      const DensityOperator rho = random_density(d, rank, rng);
      const ComplexMatrix lambda = random_effect(d, rng);
      const double overlap = (lambda * rho.matrix()).trace().real();
      const double eps = std::max(1.0 - overlap, 0.0);
      const ComplexMatrix disturbed = operator_sqrt_sandwich(lambda, rho);
      const double dist = trace_norm(rho.matrix() - disturbed);
      record(res, dist <= 2.0 * std::sqrt(eps) + 1e-9,
             "gentle-measurement inequality violated at trial " + std::to_string(t));
    }
    ++res.trials;
  }
  return res;
}

VerifyResult verify_smoothing_oracle(int trials, int max_dim, Rng& rng) {
  VerifyResult res;
  res.suite = "smoothing-oracle";
  const int dim = std::min(max_dim, 3);  // oracle supports ambient dimension <= 3
  const double grid_step = 1e-3;
  for (int t = 0; t < trials; ++t) {
    const int d = 2 + static_cast<int>(rng.uniform() * (dim - 1));
    const PureState psi = random_pure_state(d, rng);
    const GroupedDistribution p = GroupedDistribution::from_values(psi.probabilities());
    for (double eps : {0.01, 0.05, 0.1}) {
      const double solver =
          smoothed_min_entropy_pure(p, eps, static_cast<double>(d)).continuous_value_bits;
      const double oracle = oracle_smoothed_min_entropy(p, eps, grid_step, d);
      record(res, std::abs(solver - oracle) <= 2e-3,
             "solver " + std::to_string(solver) + " vs oracle " + std::to_string(oracle) +
                 " at trial " + std::to_string(t));
    }
    ++res.trials;
  }
  return res;
}

VerifyResult verify_channels(int trials, int max_dim, Rng& rng) {
  VerifyResult res;
  res.suite = "channels";
  for (int t = 0; t < trials; ++t) {
    const int d = dim_for_trial(t, max_dim, rng);
    const PureState psi = random_pure_state(d, rng);
    const std::vector<double> p = psi.probabilities();
    const double pmax = *std::max_element(p.begin(), p.end());
    const int m_limit = std::max(1, static_cast<int>(std::floor(1.0 / pmax + kGroupingTol)));
    const int m = 1 + static_cast<int>(rng.uniform() * m_limit);

    try {
      const IncoherentChannel ch = build_concentration_channel(psi, std::min(m, m_limit));
      record(res, certify_incoherent(ch), "certification failed at trial " + std::to_string(t));
      const DensityOperator out = apply_channel(ch, psi.projector());
      const ComplexVector phi = maximally_coherent(ch.output_dim, ch.output_dim).amplitudes();
      const double fid_sq = std::real((phi.adjoint() * out.matrix() * phi)(0, 0));
      record(res, fid_sq >= 1.0 - 1e-9,
             "exact transformation fidelity^2 " + std::to_string(fid_sq) + " at trial " +
                 std::to_string(t));
    } catch (const std::exception& e) {
      record(res, false, std::string("channel synthesis threw: ") + e.what());
    }

    // Random bin assignments: ribbon + Birkhoff reconstruction residual.
    try {
      std::vector<double> probs(static_cast<std::size_t>(d));
      double total = 0.0;
      for (auto& v : probs) total += v = -std::log(std::max(rng.uniform(), 1e-300));
      for (auto& v : probs) v /= total;
      const double maxp = *std::max_element(probs.begin(), probs.end());
      const int bins = std::max(1, static_cast<int>(std::floor(1.0 / maxp + kGroupingTol)));
      birkhoff_decompose(ribbon_partition(probs, bins));  // throws above 1e-9 residual
    } catch (const std::exception& e) {
      record(res, false, std::string("Birkhoff reconstruction: ") + e.what());
    }
    ++res.trials;
  }
  return res;
}

VerifyResult verify_rates(int trials, int max_dim, Rng& rng) {
  VerifyResult res;
  res.suite = "rates";
  for (int t = 0; t < trials; ++t) {
    const int d = dim_for_trial(t, max_dim, rng);
    const PureState psi = random_pure_state(d, rng);
    std::int64_t prev_m = 0;
    for (double eps : {0.01, 0.05, 0.1}) {
      const RateReport report = pure_rate(psi, eps);
      record(res, report.rate_lower_bits <= report.rate_upper_bits + 1e-9,
             "bound ordering violated at trial " + std::to_string(t));
      record(res, report.channel_fidelity_sq >= 1.0 - eps - 1e-9,
             "achievability " + std::to_string(report.channel_fidelity_sq) + " below 1 - eps at trial " +
                 std::to_string(t));
      record(res, report.m_achievable >= prev_m,
             "epsilon monotonicity violated at trial " + std::to_string(t));
      prev_m = report.m_achievable;
    }
    ++res.trials;
  }
  return res;
}

VerifyResult run_suite(const std::string& name, int trials, int max_dim, Rng& rng) {
  if (name == "lemmas") return verify_lemmas(trials, max_dim, rng);
  if (name == "smoothing-oracle") return verify_smoothing_oracle(trials, max_dim, rng);
  if (name == "channels") return verify_channels(trials, max_dim, rng);
  if (name == "rates") return verify_rates(trials, max_dim, rng);
  throw InvariantError("verify.suite",
                       "unknown suite '" + name + "' (lemmas | smoothing-oracle | channels | rates)");
}

}  // namespace coh
