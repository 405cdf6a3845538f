/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "coh/rates.hpp"

#include "coh/channels.hpp"
#include "coh/entropies.hpp"
#include "coh/linalg.hpp"
#include "coh/random.hpp"
#include "coh/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace coh {

namespace {

std::vector<GroupedDistribution> member_distributions(const PureEnsemble& ensemble) {
  std::vector<GroupedDistribution> dists;
  dists.reserve(ensemble.size());
  for (const auto& m : ensemble.members()) {
    dists.push_back(GroupedDistribution::from_values(m.state.probabilities()));
  }
  return dists;
}

double average_fidelity_sq(const std::vector<double>& weights,
                           const std::vector<GroupedDistribution>& dists, double cap,
                           double ambient) {
  double avg = 0.0;
  for (std::size_t i = 0; i < dists.size(); ++i) {
    const double f = max_fidelity_capped(dists[i], cap, ambient).fidelity;
    avg += weights[i] * f * f;
  }
  return avg;
}

/// Largest integer M in [1, hi] with avg fidelity^2 >= 1 - eps (slacked).
std::int64_t best_integer_m(const std::vector<double>& weights,
                            const std::vector<GroupedDistribution>& dists, double epsilon,
                            double ambient, std::int64_t hi) {
  const double threshold = 1.0 - epsilon - kFeasibilitySlack;
  std::int64_t lo = 1;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (average_fidelity_sq(weights, dists, 1.0 / static_cast<double>(mid), ambient) >= threshold) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

double continuous_value(const std::vector<double>& weights,
                        const std::vector<GroupedDistribution>& dists, double epsilon,
                        double ambient) {
  if (epsilon < 1e-12) {
    // All members must hit fidelity 1, so the binding cap is the largest
    // single-member max probability.
    double worst = 0.0;
    for (const auto& d : dists) worst = std::max(worst, d.max_value());
    return std::max(-std::log2(worst), 0.0);
  }
  const double threshold = 1.0 - epsilon;
  const double x_hi = std::log2(ambient);
  if (average_fidelity_sq(weights, dists, std::exp2(-x_hi), ambient) >= threshold) return x_hi;
  double a = 0.0, b = x_hi;
  for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
    const double mid = 0.5 * (a + b);
    if (average_fidelity_sq(weights, dists, std::exp2(-mid), ambient) >= threshold) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return a;
}

void require_epsilon_range(double epsilon) {
  if (epsilon < 0.0 || epsilon >= 0.5) {
    throw InvariantError("epsilon", "must lie in [0, 0.5) so that 2*epsilon < 1");
  }
}

/// Weighted output fidelity^2 of per-member concentration channels at M.
double measure_ensemble_achievability(const PureEnsemble& ensemble, int m) {
  double total = 0.0;
  const ComplexVector phi = maximally_coherent(m, m).amplitudes();
  for (const auto& member : ensemble.members()) {
    const std::vector<double> q =
        capped_waterfill_indexed(member.state.probabilities(), 1.0 / m);
    ComplexVector witness(member.state.dim());
    for (int i = 0; i < member.state.dim(); ++i) {
      const Complex amp = member.state.amplitude(i);
      const Complex phase = std::abs(amp) > 0.0 ? amp / std::abs(amp) : Complex(1.0, 0.0);
      witness(i) = std::sqrt(q[static_cast<std::size_t>(i)]) * phase;
    }
    witness /= witness.norm();
    IncoherentChannel ch = build_concentration_channel(PureState(std::move(witness)), m);
    const DensityOperator out = apply_channel(ch, member.state.projector());
    total += member.weight * std::real((phi.adjoint() * out.matrix() * phi)(0, 0));
  }
  return total;
}

// ---- assisted-rate search internals ----

struct RhoEigen {
  RealVector values;              // descending, above the support cutoff
  std::vector<PureState> states;  // matching eigenvectors
};

RhoEigen eigen_decomposition(const DensityOperator& rho) {
  HermitianEig eig = hermitian_eig(rho.matrix());
  std::vector<std::pair<double, int>> order;
  for (int i = 0; i < rho.dim(); ++i) {
    if (eig.values(i) > kSupportCutoff) order.emplace_back(eig.values(i), i);
  }
  std::sort(order.begin(), order.end(), std::greater<>());
  RhoEigen out;
  out.values.resize(static_cast<Eigen::Index>(order.size()));
  double total = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.values(static_cast<Eigen::Index>(k)) = order[k].first;
    total += order[k].first;
    out.states.push_back(PureState(eig.vectors.col(order[k].second)));
  }
  out.values /= total;  // strip support-cutoff dust
  return out;
}

ComplexMatrix fourier_isometry(int m, int r) {
  ComplexMatrix v(m, r);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < r; ++k) {
      const double angle = 2.0 * M_PI * j * k / m;
      v(j, k) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  }
  return v;
}

ComplexMatrix givens(int m, int a, int b, double theta, bool imaginary) {
  ComplexMatrix g = ComplexMatrix::Identity(m, m);
  const double c = std::cos(theta), s = std::sin(theta);
  if (imaginary) {
    g(a, a) = c;
    g(a, b) = Complex(0.0, -s);
    g(b, a) = Complex(0.0, -s);
    g(b, b) = c;
  } else {
    g(a, a) = c;
    g(a, b) = -s;
    g(b, a) = s;
    g(b, b) = c;
  }
  return g;
}

}  // namespace

RateReport pure_rate(const PureState& psi, double epsilon) {
  require_epsilon_range(epsilon);
  const GroupedDistribution p = GroupedDistribution::from_values(psi.probabilities());
  const double ambient = static_cast<double>(psi.dim());
  const SmoothedMinEntropyResult at_eps = smoothed_min_entropy_pure(p, epsilon, ambient);
  const SmoothedMinEntropyResult at_2eps = smoothed_min_entropy_pure(p, 2.0 * epsilon, ambient);

  RateReport report;
  report.epsilon = epsilon;
  report.m_achievable = at_eps.best_m;
  report.rate_lower_bits = std::log2(static_cast<double>(at_eps.best_m));
  report.rate_upper_bits = std::max(at_2eps.continuous_value_bits, report.rate_lower_bits);
  report.smoothed_value_bits = at_eps.continuous_value_bits;
  report.witness = "pure-ball waterfilling witness at cap 1/" + std::to_string(at_eps.best_m);
  report.channel_fidelity_sq = concentrate(psi, epsilon).achieved_fidelity_sq;
  return report;
}

bool ensemble_feasible(const PureEnsemble& ensemble, std::int64_t m, double epsilon) {
  if (m < 1) throw InvariantError("ensemble_feasible.M", "must be positive");
  if (m > ensemble.dim()) return false;  // cap * dim < 1: no valid target distribution
  std::vector<double> weights;
  for (const auto& mem : ensemble.members()) weights.push_back(mem.weight);
  return average_fidelity_sq(weights, member_distributions(ensemble),
                             1.0 / static_cast<double>(m), static_cast<double>(ensemble.dim())) >=
         1.0 - epsilon - kFeasibilitySlack;
}

double ensemble_continuous_value(const PureEnsemble& ensemble, double epsilon) {
  std::vector<double> weights;
  for (const auto& mem : ensemble.members()) weights.push_back(mem.weight);
  return continuous_value(weights, member_distributions(ensemble), epsilon,
                          static_cast<double>(ensemble.dim()));
}

RateReport ensemble_rate(const PureEnsemble& ensemble, double epsilon) {
  require_epsilon_range(epsilon);
  std::vector<double> weights;
  for (const auto& mem : ensemble.members()) weights.push_back(mem.weight);
  const std::vector<GroupedDistribution> dists = member_distributions(ensemble);
  const double ambient = static_cast<double>(ensemble.dim());

  RateReport report;
  report.epsilon = epsilon;
  report.m_achievable = best_integer_m(weights, dists, epsilon, ambient, ensemble.dim());
  report.rate_lower_bits = std::log2(static_cast<double>(report.m_achievable));
  report.smoothed_value_bits =
      std::max(continuous_value(weights, dists, epsilon, ambient), report.rate_lower_bits);
  report.rate_upper_bits =
      std::max(continuous_value(weights, dists, 2.0 * epsilon, ambient), report.rate_lower_bits);
  report.witness =
      "per-member waterfilling witnesses at cap 1/" + std::to_string(report.m_achievable);
  report.channel_fidelity_sq =
      measure_ensemble_achievability(ensemble, static_cast<int>(report.m_achievable));
  return report;
}

double f_min_delta(const PureEnsemble& ensemble) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& d : member_distributions(ensemble)) best = std::min(best, s_min(d));
  return best;
}

RateReport assisted_rate(const DensityOperator& rho, double epsilon, int members, int restarts,
                         std::uint64_t seed) {
  require_epsilon_range(epsilon);
  if (restarts < 1) throw InvariantError("assisted_rate.restarts", "must be at least 1");
  const RhoEigen eig = eigen_decomposition(rho);
  const int r = static_cast<int>(eig.values.size());
  if (members < r) {
    throw InvariantError("assisted_rate.members",
                         "needs at least rank(rho) = " + std::to_string(r) + " members");
  }

  auto objective = [&](const ComplexMatrix& v) {
    return ensemble_continuous_value(ensemble_from_isometry(eig.values, eig.states, v), epsilon);
  };

  // Coordinate-wise hill climbing over plane rotations acting on the rows of
  // the isometry (both real and phase-twisted generators), with step halving.
  // The step floor is 1e-9 rad: near a flat optimum the fidelity deficit is
  // quadratic in the remaining angle, and the 1e-9 feasibility slack needs
  // the angle below ~3e-5 before integer feasibility flips.
  auto hill_climb = [&](ComplexMatrix v) {
    double value = objective(v);
    for (double step = 0.3; step > 1e-9;) {
      bool improved = false;
      for (int a = 0; a < members; ++a) {
        for (int b = a + 1; b < members; ++b) {
          for (int type = 0; type < 2; ++type) {
            for (double sign : {1.0, -1.0}) {
              const ComplexMatrix cand = givens(members, a, b, sign * step, type == 1) * v;
              const double cand_value = objective(cand);
              if (cand_value > value + 1e-14) {
                v = cand;
                value = cand_value;
                improved = true;
              }
            }
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    return std::pair<ComplexMatrix, double>{v, value};
  };

  std::vector<ComplexMatrix> starts;
  ComplexMatrix eye = ComplexMatrix::Zero(members, r);
  eye.topRows(r) = ComplexMatrix::Identity(r, r);
  starts.push_back(eye);  // eigen-ensemble
  starts.push_back(fourier_isometry(members, r));
  Rng rng(seed);
  for (int t = 0; t < restarts; ++t) starts.push_back(random_isometry(members, r, rng));

  ComplexMatrix best_v = starts.front();
  double best_value = -1.0;
  for (const auto& start : starts) {
    auto [v, value] = hill_climb(start);
    if (value > best_value) {
      best_value = value;
      best_v = v;
    }
  }

  const PureEnsemble eigen_ensemble = ensemble_from_isometry(eig.values, eig.states, eye);
  const PureEnsemble best_ensemble = ensemble_from_isometry(eig.values, eig.states, best_v);
  RateReport best = ensemble_rate(best_ensemble, epsilon);
  RateReport base = ensemble_rate(eigen_ensemble, epsilon);
  RateReport report = (base.m_achievable > best.m_achievable ||
                       (base.m_achievable == best.m_achievable &&
                        base.smoothed_value_bits > best.smoothed_value_bits))
                          ? base
                          : best;
  report.witness = "best decomposition found (achievable lower bound; upper bound is "
                   "ensemble-conditional)";
  report.seed = seed;
  report.restarts = restarts;
  return report;
}

// ---- n-copy sweep ----

namespace {

/// Grouped distribution with log2 outcome values; products of many copies
/// stay well-scaled here.
struct LogGrouped {
  std::vector<std::pair<double, double>> groups;  // (log2 value, multiplicity), descending
};

LogGrouped to_log(const GroupedDistribution& d) {
  LogGrouped out;
  for (const auto& g : d.groups()) out.groups.emplace_back(std::log2(g.value), g.multiplicity);
  return out;
}

LogGrouped log_product(const LogGrouped& a, const LogGrouped& b) {
  std::vector<std::pair<double, double>> prod;
  prod.reserve(a.groups.size() * b.groups.size());
  for (const auto& [la, ma] : a.groups) {
    for (const auto& [lb, mb] : b.groups) prod.emplace_back(la + lb, ma * mb);
  }
  std::sort(prod.begin(), prod.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  LogGrouped out;
  for (const auto& [lv, mult] : prod) {
    if (!out.groups.empty() && out.groups.back().first - lv <= 1e-9) {
      out.groups.back().second += mult;
    } else {
      out.groups.emplace_back(lv, mult);
    }
  }
  return out;
}

GroupedDistribution from_log(const LogGrouped& lg) {
  std::vector<ProbabilityGroup> groups;
  groups.reserve(lg.groups.size());
  double mass = 0.0;
  for (const auto& [lv, mult] : lg.groups) {
    const double v = std::exp2(lv);
    groups.push_back({v, mult});
    mass += v * mult;
  }
  // Accumulated rounding over many copies can push the mass past the 1e-9
  // invariant; rescale (relative error ~1e-12 per group).
  for (auto& g : groups) g.value /= mass;
  return GroupedDistribution::from_groups(std::move(groups));
}

void enumerate_compositions(int n, int parts, std::vector<int>& current,
                            const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    current.push_back(n);
    emit(current);
    current.pop_back();
    return;
  }
  for (int first = 0; first <= n; ++first) {
    current.push_back(first);
    enumerate_compositions(n - first, parts - 1, current, emit);
    current.pop_back();
  }
}

}  // namespace

std::vector<SweepRow> ncopy_sweep(const PureEnsemble& ensemble, double epsilon, int n_max) {
  require_epsilon_range(epsilon);
  if (n_max < 1) throw InvariantError("ncopy_sweep.n_max", "must be at least 1");
  const int k = static_cast<int>(ensemble.size());
  const int d = ensemble.dim();
  const std::vector<GroupedDistribution> base = member_distributions(ensemble);

  double target_avg = 0.0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    target_avg += ensemble.members()[i].weight * shannon_entropy(base[i]);
  }
  const double target_da = d_a_closed_form(ensemble.mixture());

  // Per-member tensor powers, built incrementally.
  std::vector<std::vector<LogGrouped>> powers(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    powers[static_cast<std::size_t>(j)].push_back({{{0.0, 1.0}}});  // 0th power: point mass
    powers[static_cast<std::size_t>(j)].push_back(to_log(base[static_cast<std::size_t>(j)]));
  }

  std::vector<double> log_w(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) log_w[static_cast<std::size_t>(j)] = std::log(ensemble.members()[static_cast<std::size_t>(j)].weight);

  std::vector<SweepRow> rows;
  std::size_t group_budget = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 0; j < k; ++j) {
      auto& pw = powers[static_cast<std::size_t>(j)];
      while (static_cast<int>(pw.size()) <= n) pw.push_back(log_product(pw.back(), pw[1]));
    }

    std::vector<double> weights;
    std::vector<GroupedDistribution> dists;
    std::vector<int> scratch;
    enumerate_compositions(n, k, scratch, [&](const std::vector<int>& counts) {
      double log_weight = std::lgamma(n + 1.0);
      for (int j = 0; j < k; ++j) {
        log_weight -= std::lgamma(counts[static_cast<std::size_t>(j)] + 1.0);
        log_weight += counts[static_cast<std::size_t>(j)] * log_w[static_cast<std::size_t>(j)];
      }
      LogGrouped dist{{{0.0, 1.0}}};
      for (int j = 0; j < k; ++j) {
        dist = log_product(dist, powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(counts[static_cast<std::size_t>(j)])]);
      }
      group_budget += dist.groups.size();
      if (group_budget > 1'000'000) {
        throw InvariantError("ncopy_sweep.budget", "total group count exceeds 1e6");
      }
      weights.push_back(std::exp(log_weight));
      dists.push_back(from_log(dist));
    });

    const double ambient = std::pow(static_cast<double>(d), n);
    const std::int64_t hi =
        ambient >= 9.0e18 ? (std::int64_t{1} << 62)
                          : static_cast<std::int64_t>(std::floor(ambient + kGroupingTol));
    const std::int64_t m = best_integer_m(weights, dists, epsilon, ambient, hi);

    SweepRow row;
    row.n = n;
    row.rate_bits = std::log2(static_cast<double>(m));
    row.rate_per_copy = row.rate_bits / n;
    row.target_avg_bits = target_avg;
    row.target_da_bits = target_da;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace coh
