/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "coh/channels.hpp"

#include "coh/linalg.hpp"
#include "coh/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>

namespace coh {

namespace {

constexpr double kDecompositionZero = 1e-12;
constexpr double kDecompositionResidual = 1e-9;

double cumulative(const GroupedDistribution& dist, double k) {
  double mass = 0.0, seen = 0.0;
  for (const auto& g : dist.groups()) {
    const double take = std::min(g.multiplicity, k - seen);
    if (take <= 0.0) break;
    mass += take * g.value;
    seen += take;
  }
  return mass;
}

// Deterministic perfect matching (columns -> rows) on entries above the
// zeroing threshold, by augmenting paths. Adjacency per column is ordered by
// entry descending, ties by lowest row index.
bool perfect_matching(const RealMatrix& a, std::vector<int>& row_of_col) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    auto& rows = adj[static_cast<std::size_t>(c)];
    for (int r = 0; r < n; ++r) {
      if (a(r, c) > kDecompositionZero) rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end(), [&](int x, int y) {
      if (a(x, c) != a(y, c)) return a(x, c) > a(y, c);
      return x < y;
    });
  }
  std::vector<int> col_of_row(static_cast<std::size_t>(n), -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int c) -> bool {
    for (int r : adj[static_cast<std::size_t>(c)]) {
      if (visited[static_cast<std::size_t>(r)]) continue;
      visited[static_cast<std::size_t>(r)] = 1;
      int& owner = col_of_row[static_cast<std::size_t>(r)];
      if (owner < 0 || augment(owner)) {
        owner = c;
        row_of_col[static_cast<std::size_t>(c)] = r;
        return true;
      }
    }
    return false;
  };
  row_of_col.assign(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < n; ++c) {
    visited.assign(static_cast<std::size_t>(n), 0);
    if (!augment(c)) return false;
  }
  return true;
}

}  // namespace

bool check_majorization(const GroupedDistribution& q, const GroupedDistribution& p) {
  std::set<double> breakpoints;
  double acc = 0.0;
  for (const auto& g : q.groups()) breakpoints.insert(acc += g.multiplicity);
  acc = 0.0;
  for (const auto& g : p.groups()) breakpoints.insert(acc += g.multiplicity);
  for (double k : breakpoints) {
    if (cumulative(q, k) + kGroupingTol < cumulative(p, k)) return false;
  }
  return true;
}

BinAssignment ribbon_partition(const std::vector<double>& p, int m) {
  const int d = static_cast<int>(p.size());
  if (m < 1) throw InvariantError("ribbon_partition.M", "must be positive");
  const double bin = 1.0 / static_cast<double>(m);
  for (int i = 0; i < d; ++i) {
    if (p[static_cast<std::size_t>(i)] > bin + kGroupingTol) {
      throw InvariantError("ribbon_partition.p",
                           "p[" + std::to_string(i) + "] = " +
                               std::to_string(p[static_cast<std::size_t>(i)]) +
                               " exceeds 1/M = " + std::to_string(bin));
    }
  }
  RealMatrix w = RealMatrix::Zero(d, m);
  double pos = 0.0;
  for (int i = 0; i < d; ++i) {
    const double lo = pos;
    const double hi = pos + p[static_cast<std::size_t>(i)];
    const int first = std::max(0, static_cast<int>(std::floor(lo / bin)));
    const int last = std::min(m - 1, static_cast<int>(std::floor((hi - 1e-15) / bin)));
    for (int b = first; b <= last; ++b) {
      const double overlap = std::min(hi, (b + 1) * bin) - std::max(lo, b * bin);
      if (overlap > 0.0) w(i, b) += m * overlap;
    }
    pos = hi;
  }
  return {std::move(w)};
}

std::vector<BirkhoffTerm> birkhoff_decompose(const BinAssignment& wa) {
  const int d = static_cast<int>(wa.w.rows());
  const int m = static_cast<int>(wa.w.cols());
  if (m > d) throw InvariantError("birkhoff_decompose.W", "more bins than input indices");
  for (int c = 0; c < m; ++c) {
    if (std::abs(wa.w.col(c).sum() - 1.0) > 1e-10) {
      throw InvariantError("birkhoff_decompose.W",
                           "column " + std::to_string(c) + " does not sum to 1");
    }
  }

  // Pad with d - m slack columns to a doubly stochastic d x d matrix; row
  // slacks are laid out by a second ribbon pass over [0, d - m].
  RealMatrix a = RealMatrix::Zero(d, d);
  a.leftCols(m) = wa.w;
  double pos = 0.0;
  for (int i = 0; i < d; ++i) {
    const double slack = std::max(1.0 - wa.w.row(i).sum(), 0.0);
    const double lo = pos;
    const double hi = pos + slack;
    const int first = std::max(0, static_cast<int>(std::floor(lo)));
    const int last = std::min(d - m - 1, static_cast<int>(std::floor(hi - 1e-15)));
    for (int b = first; b <= last; ++b) {
      const double overlap = std::min(hi, static_cast<double>(b + 1)) - std::max(lo, static_cast<double>(b));
      if (overlap > 0.0) a(i, m + b) += overlap;
    }
    pos = hi;
  }

  std::vector<BirkhoffTerm> terms;
  double total_weight = 0.0;
  const std::size_t max_terms = static_cast<std::size_t>(d) * static_cast<std::size_t>(d) + 1;
  std::vector<int> row_of_col;
  while (total_weight < 1.0 - 1e-10 && terms.size() < max_terms) {
    if (!perfect_matching(a, row_of_col)) break;
    double weight = std::numeric_limits<double>::infinity();
    for (int c = 0; c < d; ++c) weight = std::min(weight, a(row_of_col[static_cast<std::size_t>(c)], c));
    weight = std::min(weight, 1.0 - total_weight);
    BirkhoffTerm term;
    term.weight = weight;
    term.assignment.assign(row_of_col.begin(), row_of_col.begin() + m);
    terms.push_back(std::move(term));
    total_weight += weight;
    for (int c = 0; c < d; ++c) {
      double& entry = a(row_of_col[static_cast<std::size_t>(c)], c);
      entry -= weight;
      if (entry < kDecompositionZero) entry = 0.0;
    }
  }

  // Reconstruction check over the real bins; failure means an invariant was
  // breached upstream.
  RealMatrix recon = RealMatrix::Zero(d, m);
  for (const auto& t : terms) {
    for (int c = 0; c < m; ++c) recon(t.assignment[static_cast<std::size_t>(c)], c) += t.weight;
  }
  const double residual = (recon - wa.w).cwiseAbs().maxCoeff();
  if (std::abs(total_weight - 1.0) > kDecompositionResidual || residual > kDecompositionResidual) {
    throw std::runtime_error("birkhoff_decompose: reconstruction residual " +
                             std::to_string(residual) + " exceeds 1e-9");
  }
  return terms;
}

IncoherentChannel build_concentration_channel(const PureState& psi, int m) {
  const int d = psi.dim();
  const std::vector<double> p = psi.probabilities();
  const double bin = 1.0 / static_cast<double>(m);
  for (int i = 0; i < d; ++i) {
    if (p[static_cast<std::size_t>(i)] > bin + kGroupingTol) {
      throw InvariantError("build_concentration_channel.psi",
                           "|psi[" + std::to_string(i) + "]|^2 = " +
                               std::to_string(p[static_cast<std::size_t>(i)]) +
                               " exceeds 1/M = " + std::to_string(bin));
    }
  }

  BinAssignment w = ribbon_partition(p, m);
  std::vector<BirkhoffTerm> terms = birkhoff_decompose(w);

  IncoherentChannel ch;
  ch.input_dim = d;
  ch.output_dim = m;
  for (const auto& t : terms) {
    ComplexMatrix k = ComplexMatrix::Zero(m, d);
    for (int b = 0; b < m; ++b) {
      const int i = t.assignment[static_cast<std::size_t>(b)];
      const double pi = p[static_cast<std::size_t>(i)];
      const Complex amp = psi.amplitude(i);
      const Complex phase = std::abs(amp) > 0.0 ? std::conj(amp) / std::abs(amp) : Complex(1.0, 0.0);
      k(b, i) = std::sqrt(t.weight / (m * pi)) * phase;
    }
    ch.kraus.push_back(std::move(k));
  }

  // Indices outside the support are routed incoherently to |0>.
  ComplexMatrix rest = ComplexMatrix::Zero(m, d);
  bool any_rest = false;
  for (int i = 0; i < d; ++i) {
    if (p[static_cast<std::size_t>(i)] < kZeroDiagTol) {
      rest(0, i) = 1.0;
      any_rest = true;
    }
  }
  if (any_rest) ch.kraus.push_back(std::move(rest));

  ComplexMatrix completeness = ComplexMatrix::Zero(d, d);
  for (const auto& k : ch.kraus) completeness += k.adjoint() * k;
  const double dev = (completeness - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > kDecompositionResidual) {
    throw std::runtime_error("build_concentration_channel: completeness residual " +
                             std::to_string(dev) + " exceeds 1e-9");
  }
  return ch;
}

bool certify_incoherent(const IncoherentChannel& ch) {
  if (ch.kraus.empty() || ch.input_dim < 1 || ch.output_dim < 1) return false;
  ComplexMatrix completeness = ComplexMatrix::Zero(ch.input_dim, ch.input_dim);
  for (const auto& k : ch.kraus) {
    if (k.rows() != ch.output_dim || k.cols() != ch.input_dim) return false;
    for (int c = 0; c < ch.input_dim; ++c) {
      int nonzero = 0;
      for (int r = 0; r < ch.output_dim; ++r) {
        if (std::abs(k(r, c)) > kColumnSparsityTol) ++nonzero;
      }
      if (nonzero > 1) return false;  // K|c> must be a scalar multiple of a basis state
    }
    completeness += k.adjoint() * k;
  }
  return (completeness - ComplexMatrix::Identity(ch.input_dim, ch.input_dim)).cwiseAbs().maxCoeff() <=
         kHermitianTol;
}

DensityOperator apply_channel(const IncoherentChannel& ch, const DensityOperator& rho) {
  if (rho.dim() != ch.input_dim) {
    throw InvariantError("apply_channel.rho", "dimension mismatch with channel input");
  }
  ComplexMatrix out = ComplexMatrix::Zero(ch.output_dim, ch.output_dim);
  for (const auto& k : ch.kraus) out += k * rho.matrix() * k.adjoint();
  return DensityOperator(std::move(out));
}

ConcentrationOutcome concentrate(const PureState& psi, double epsilon) {
  const GroupedDistribution p = GroupedDistribution::from_values(psi.probabilities());
  const SmoothedMinEntropyResult sm =
      smoothed_min_entropy_pure(p, epsilon, static_cast<double>(psi.dim()));
  const int m = static_cast<int>(sm.best_m);

  // Smoothing witness: amplitudes sqrt(q*), phases of psi.
  const std::vector<double> q = capped_waterfill_indexed(psi.probabilities(), 1.0 / m);
  ComplexVector witness(psi.dim());
  for (int i = 0; i < psi.dim(); ++i) {
    const Complex amp = psi.amplitude(i);
    const Complex phase = std::abs(amp) > 0.0 ? amp / std::abs(amp) : Complex(1.0, 0.0);
    witness(i) = std::sqrt(q[static_cast<std::size_t>(i)]) * phase;
  }
  witness /= witness.norm();

  ConcentrationOutcome out;
  out.m = sm.best_m;
  out.channel = build_concentration_channel(PureState(std::move(witness)), m);
  const DensityOperator result = apply_channel(out.channel, psi.projector());
  const ComplexVector phi = maximally_coherent(m, m).amplitudes();
  out.achieved_fidelity_sq = std::real((phi.adjoint() * result.matrix() * phi)(0, 0));
  return out;
}

}  // namespace coh
