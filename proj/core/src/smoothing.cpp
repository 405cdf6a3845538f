/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "coh/smoothing.hpp"

#include "coh/entropies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coh {

namespace {

constexpr double kScanTol = 1e-15;

GroupedDistribution canonical_groups(std::vector<ProbabilityGroup> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const ProbabilityGroup& a, const ProbabilityGroup& b) { return a.value > b.value; });
  std::vector<ProbabilityGroup> merged;
  for (const auto& g : raw) {
    // Keep tiny positive values: with n-copy multiplicities they carry real
    // mass. Merging uses the mass-weighted mean for the same reason.
    if (g.value <= 0.0 || g.multiplicity <= 0.0) continue;
    if (!merged.empty() && merged.back().value - g.value <= kGroupingTol) {
      auto& back = merged.back();
      const double mult = back.multiplicity + g.multiplicity;
      back.value = (back.value * back.multiplicity + g.value * g.multiplicity) / mult;
      back.multiplicity = mult;
    } else {
      merged.push_back(g);
    }
  }
  return GroupedDistribution::from_groups(std::move(merged));
}

}  // namespace

CappedFidelityResult max_fidelity_capped(const GroupedDistribution& p, double cap,
                                         double ambient_dim) {
  if (cap <= 0.0 || cap > 1.0 + kGroupingTol) {
    throw InvariantError("max_fidelity_capped.cap", "must lie in (0, 1]");
  }
  cap = std::min(cap, 1.0);
  const double support = p.total_multiplicity();
  const double d = ambient_dim > 0.0 ? ambient_dim : support;
  if (d + kGroupingTol < support) {
    throw InvariantError("max_fidelity_capped.ambient_dim", "smaller than the support of p");
  }
  if (cap * d < 1.0 - kGroupingTol) {
    throw InvariantError("max_fidelity_capped.cap",
                         "infeasible: cap * ambient_dim = " + std::to_string(cap * d) + " < 1");
  }

  const auto& groups = p.groups();
  double capped_mult = 0.0;
  double rest_mass = p.total_mass();

  // Descending scan: the first k groups sit at the cap, the rest scale as
  // q = t * p with t fixed by normalization.
  for (std::size_t k = 0; k <= groups.size(); ++k) {
    const double budget = 1.0 - cap * capped_mult;
    if (rest_mass > kScanTol && budget > -kScanTol) {
      const double t = std::max(budget, 0.0) / rest_mass;
      const bool next_uncapped = k == groups.size() || t * groups[k].value <= cap + kScanTol;
      const bool prev_capped = k == 0 || t * groups[k - 1].value >= cap - kScanTol;
      if (next_uncapped && prev_capped) {
        CappedFidelityResult res;
        res.scaling_t = t;
        res.capped_mass = cap * capped_mult;
        std::vector<ProbabilityGroup> q;
        double fid = 0.0;
        if (capped_mult > 0.0) q.push_back({cap, capped_mult});
        for (std::size_t g = 0; g < k; ++g) {
          fid += groups[g].multiplicity * std::sqrt(groups[g].value * cap);
        }
        for (std::size_t g = k; g < groups.size(); ++g) {
          q.push_back({t * groups[g].value, groups[g].multiplicity});
          fid += groups[g].multiplicity * std::sqrt(t) * groups[g].value;
        }
        res.fidelity = std::min(fid, 1.0);
        res.q_star = canonical_groups(std::move(q));
        return res;
      }
    }
    if (k < groups.size()) {
      capped_mult += groups[k].multiplicity;
      rest_mass -= groups[k].value * groups[k].multiplicity;
    }
  }

  // Every support entry is at the cap; the leftover mass lands on ambient
  // outcomes where p vanishes, cap-first.
  const double leftover = 1.0 - cap * support;
  double fid = 0.0;
  std::vector<ProbabilityGroup> q;
  q.push_back({cap, support});
  for (const auto& g : groups) fid += g.multiplicity * std::sqrt(g.value * cap);
  const double full = std::floor(leftover / cap + kScanTol);
  if (full >= 1.0) q.push_back({cap, full});
  const double remainder = leftover - full * cap;
  if (remainder > kZeroDiagTol) q.push_back({remainder, 1.0});

  CappedFidelityResult res;
  res.fidelity = std::min(fid, 1.0);
  res.scaling_t = 0.0;
  res.capped_mass = cap * (support + full);
  res.q_star = canonical_groups(std::move(q));
  return res;
}

std::vector<double> capped_waterfill_indexed(const std::vector<double>& p, double cap) {
  const std::size_t d = p.size();
  std::vector<double> support_values;
  for (double v : p) {
    if (v > kZeroDiagTol) support_values.push_back(v);
  }
  GroupedDistribution grouped = GroupedDistribution::from_values(support_values);
  CappedFidelityResult sol = max_fidelity_capped(grouped, cap, static_cast<double>(d));

  std::vector<double> q(d, 0.0);
  double assigned = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    if (p[i] > kZeroDiagTol) {
      q[i] = sol.scaling_t > 0.0 ? std::min(cap, sol.scaling_t * p[i]) : cap;
      assigned += q[i];
    }
  }
  double leftover = 1.0 - assigned;
  for (std::size_t i = 0; i < d && leftover > kZeroDiagTol; ++i) {
    if (p[i] <= kZeroDiagTol) {
      q[i] = std::min(cap, leftover);
      leftover -= q[i];
    }
  }
  return q;
}

SmoothedMinEntropyResult smoothed_min_entropy_pure(const GroupedDistribution& p, double epsilon,
                                                   double ambient_dim, std::int64_t max_m) {
  if (epsilon < 0.0 || epsilon >= 1.0) {
    throw InvariantError("smoothed_min_entropy_pure.epsilon", "must lie in [0, 1)");
  }
  const double d = ambient_dim > 0.0 ? ambient_dim : p.total_multiplicity();
  std::int64_t hi = max_m > 0 ? max_m : static_cast<std::int64_t>(std::floor(d + kGroupingTol));
  hi = std::min<std::int64_t>(hi, std::int64_t{1} << 62);
  const double threshold = 1.0 - epsilon;

  auto fidelity_sq = [&](double cap) {
    return std::pow(max_fidelity_capped(p, cap, d).fidelity, 2);
  };
  auto feasible = [&](std::int64_t m) {
    if (static_cast<double>(m) > d + kGroupingTol) return false;
    return fidelity_sq(1.0 / static_cast<double>(m)) >= threshold - kFeasibilitySlack;
  };

  // fidelity_sq(1/M) is nonincreasing in M, so binary search applies.
  std::int64_t lo = 1;  // Phi_1 is incoherent: always reachable
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }

  SmoothedMinEntropyResult res;
  res.epsilon = epsilon;
  res.best_m = lo;
  res.witness = max_fidelity_capped(p, 1.0 / static_cast<double>(lo), d);

  if (epsilon < 1e-12) {
    res.continuous_value_bits = s_min(p);
  } else {
    const double x_hi = std::log2(d);
    if (fidelity_sq(std::exp2(-x_hi)) >= threshold) {
      res.continuous_value_bits = x_hi;
    } else {
      double a = 0.0, b = x_hi;  // bisection on log2(m)
      for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
        const double mid = 0.5 * (a + b);
        if (fidelity_sq(std::exp2(-mid)) >= threshold) {
          a = mid;
        } else {
          b = mid;
        }
      }
      res.continuous_value_bits = a;
    }
  }
  res.continuous_value_bits =
      std::max(res.continuous_value_bits, std::log2(static_cast<double>(res.best_m)));
  return res;
}

double oracle_smoothed_min_entropy(const GroupedDistribution& p, double epsilon, double grid_step,
                                   int ambient_dim) {
  const double support = p.total_multiplicity();
  const int d = ambient_dim > 0 ? ambient_dim : static_cast<int>(std::lround(support));
  if (d > 3 || static_cast<double>(d) + kGroupingTol < support) {
    throw InvariantError("oracle_smoothed_min_entropy.support", "supports ambient dimension <= 3");
  }
  if (grid_step > 1e-2 || grid_step <= 0.0) {
    throw InvariantError("oracle_smoothed_min_entropy.grid_step", "must lie in (0, 1e-2]");
  }
  // Expand groups to a plain value vector, padded with zeros.
  std::vector<double> pv;
  for (const auto& g : p.groups()) {
    for (double k = 0.0; k < g.multiplicity - 0.5; k += 1.0) pv.push_back(g.value);
  }
  while (static_cast<int>(pv.size()) < d) pv.push_back(0.0);

  const double threshold = 1.0 - epsilon - kFeasibilitySlack;
  double best = s_min(p);  // q = p is always feasible
  std::vector<double> best_q = pv;

  auto consider = [&](const std::vector<double>& q) {
    double fid = 0.0, qmax = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      fid += std::sqrt(pv[i] * q[i]);
      qmax = std::max(qmax, q[i]);
    }
    if (fid * fid >= threshold && qmax > 0.0 && -std::log2(qmax) > best) {
      best = -std::log2(qmax);
      best_q = q;
    }
  };

  // Coarse pass at grid_step over the whole simplex, then a fine pass.
  // Quantizing q_max at the coarse step alone can cost up to
  // grid_step / (q_max ln 2) bits, and the coarse argmax can sit anywhere on a
  // near-flat ridge of equal q_max, so the fine pass narrows only the leading
  // coordinate (which carries q_max at the optimum) and re-sweeps the rest of
  // the simplex at the fine step.
  auto clampq = [](double v) { return std::min(std::max(v, 0.0), 1.0); };
  const double fine = grid_step / 25.0;

  if (d == 1) return 0.0;
  if (d == 2) {
    for (double q1 = 0.0; q1 <= 1.0 + kScanTol; q1 += fine) {
      consider({clampq(q1), clampq(1.0 - q1)});
    }
    return best;
  }

  for (double q1 = 0.0; q1 <= 1.0 + kScanTol; q1 += grid_step) {
    for (double q2 = 0.0; q1 + q2 <= 1.0 + kScanTol; q2 += grid_step) {
      consider({clampq(q1), clampq(std::min(q2, 1.0 - q1)), clampq(1.0 - q1 - q2)});
    }
  }
  const double lo1 = clampq(best_q[0] - 2.0 * grid_step);
  const double hi1 = clampq(best_q[0] + 2.0 * grid_step);
  for (double q1 = lo1; q1 <= hi1 + kScanTol; q1 += fine) {
    for (double q2 = 0.0; q1 + q2 <= 1.0 + kScanTol; q2 += fine) {
      consider({clampq(q1), clampq(std::min(q2, 1.0 - q1)), clampq(1.0 - q1 - q2)});
    }
  }
  return best;
}

}  // namespace coh
