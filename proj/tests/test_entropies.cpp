/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coh/entropies.hpp"
#include "coh/linalg.hpp"
#include "coh/random.hpp"

#include <cmath>
#include <limits>

using namespace coh;

namespace {

PureState make_pure(std::initializer_list<double> amps) {
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (double a : amps) v(i++) = a;
  return PureState(std::move(v));
}

DensityOperator diag_density(std::initializer_list<double> d) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()),
                                        static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double v : d) m(i, i) = v, ++i;
  return DensityOperator(std::move(m));
}

PureEnsemble random_ensemble(int dim, int members, Rng& rng) {
  std::vector<EnsembleMember> ms;
  double total = 0.0;
  for (int i = 0; i < members; ++i) {
    const double w = -std::log(std::max(rng.uniform(), 1e-300));
    ms.push_back({w, random_pure_state(dim, rng)});
    total += w;
  }
  for (auto& m : ms) m.weight /= total;
  return PureEnsemble(std::move(ms));
}

}  // namespace

TEST_CASE("shannon entropy worked values") {
  CHECK(shannon_entropy(GroupedDistribution::from_values({0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(shannon_entropy(GroupedDistribution::from_values({1.0})) == doctest::Approx(0.0));
  CHECK(shannon_entropy(GroupedDistribution::from_values({0.9, 0.1})) ==
        doctest::Approx(0.46899).epsilon(1e-4));
}

TEST_CASE("von Neumann entropy worked values") {
  Rng rng(21);
  CHECK(von_neumann(random_pure_state(4, rng).projector()) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(von_neumann(diag_density({0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(von_neumann(diag_density({0.5, 0.3, 0.2})) == doctest::Approx(1.48548).epsilon(1e-4));
}

TEST_CASE("Renyi relative entropy worked values") {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const DensityOperator rho = diag_density({0.9, 0.1});
  for (double alpha : {0.5, 2.0, 4.0}) {
    CHECK(renyi_relative(alpha, rho, rho, id2) == doctest::Approx(0.0).epsilon(1e-9));
  }
  const DensityOperator half = diag_density({0.5, 0.5});
  CHECK(renyi_relative(2.0, rho, half, id2) ==
        doctest::Approx(std::log2(2.0 * (0.81 + 0.01))).epsilon(1e-4));
  // alpha -> 0 limit approaches the order-0 quantity.
  CHECK(std::abs(renyi_relative(1e-4, rho, half, id2) - s0_relative(rho, half)) <= 1e-3);
}

TEST_CASE("Renyi relative entropy support handling") {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const DensityOperator pure0 = make_pure({1.0, 0.0}).projector();
  const DensityOperator pure1 = make_pure({0.0, 1.0}).projector();
  CHECK_THROWS_AS(renyi_relative(2.0, pure0, pure1, id2), InvariantError);
}

TEST_CASE("order-0 relative entropy worked values") {
  const DensityOperator sigma = diag_density({0.25, 0.75});
  CHECK(s0_relative(diag_density({0.9, 0.1}), sigma) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(s0_relative(make_pure({1.0, 0.0}).projector(), sigma) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(s0_relative(make_pure({1.0, 0.0}).projector(), make_pure({0.0, 1.0}).projector()) ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("min-entropy of coherence worked values") {
  Rng rng(22);
  const PureState psi = random_pure_state(4, rng);
  CHECK(c_min(psi.projector()) == doctest::Approx(s_min(dephase(psi.projector()))).epsilon(1e-12));
  CHECK(c_min(diag_density({0.4, 0.3, 0.3})) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(c_min(make_pure({std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2)}).projector()) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("min-entropy worked values") {
  CHECK(s_min(GroupedDistribution::from_values({0.25, 0.25, 0.25, 0.25})) == doctest::Approx(2.0));
  CHECK(s_min(GroupedDistribution::from_values({0.9, 0.1})) ==
        doctest::Approx(0.15200).epsilon(1e-4));
  CHECK(s_min(GroupedDistribution::from_values({1.0})) == doctest::Approx(0.0));
}

TEST_CASE("relative entropy of coherence worked values") {
  CHECK(c_r(diag_density({0.7, 0.3})) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(c_r(maximally_coherent(4, 4).projector()) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(c_r(make_pure({std::sqrt(0.9), std::sqrt(0.1)}).projector()) ==
        doctest::Approx(0.46899).epsilon(1e-4));
}

TEST_CASE("relative entropy of coherence is nonnegative and detects incoherence") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const int d = 2 + static_cast<int>(rng.uniform() * 4);
    const DensityOperator rho = random_density(d, d, rng);
    const double value = c_r(rho);
    CHECK(value >= -1e-9);
    ComplexMatrix diag_only = rho.matrix().diagonal().asDiagonal();
    const double off_mass = (rho.matrix() - diag_only).norm();
    if (value <= 1e-9) CHECK(off_mass <= 1e-4);
  }
}

TEST_CASE("assisted closed form worked values") {
  CHECK(d_a_closed_form(diag_density({0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(d_a_closed_form(make_pure({1.0, 0.0}).projector()) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(d_a_closed_form(diag_density({0.5, 0.3, 0.2})) == doctest::Approx(1.48548).epsilon(1e-4));
}

TEST_CASE("Renyi monotonicity in alpha on diagonal pairs") {
  Rng rng(24);
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + static_cast<int>(rng.uniform() * 3);
    std::vector<double> p(static_cast<std::size_t>(d)), q(static_cast<std::size_t>(d));
    double sp = 0.0, sq = 0.0;
    for (int i = 0; i < d; ++i) {
      sp += p[static_cast<std::size_t>(i)] = 0.05 + rng.uniform();
      sq += q[static_cast<std::size_t>(i)] = 0.05 + rng.uniform();
    }
    ComplexMatrix mp = ComplexMatrix::Zero(d, d), mq = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      mp(i, i) = p[static_cast<std::size_t>(i)] / sp;
      mq(i, i) = q[static_cast<std::size_t>(i)] / sq;
    }
    const DensityOperator rho(std::move(mp)), sigma(std::move(mq));
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    // The relative Renyi divergence is monotone nondecreasing in alpha.
    double prev = -std::numeric_limits<double>::infinity();
    for (double alpha : {0.25, 0.5, 2.0, 4.0}) {
      const double cur = renyi_relative(alpha, rho, sigma, id);
      CHECK(cur >= prev - 1e-9);
      prev = cur;
    }
  }
}

TEST_CASE("quantum-classical state construction") {
  const PureState plus = maximally_coherent(2, 2);
  ComplexVector minus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  const PureEnsemble pm({{0.5, plus}, {0.5, PureState(minus)}});
  const DensityOperator sigma = qc_state(pm);
  REQUIRE(sigma.dim() == 4);
  CHECK((sigma.matrix().block(0, 0, 2, 2) - 0.5 * plus.projector().matrix()).norm() <= 1e-12);
  CHECK(sigma.matrix().block(0, 2, 2, 2).norm() <= 1e-12);

  const PureEnsemble single({{1.0, plus}});
  CHECK((qc_state(single).matrix() - plus.projector().matrix()).norm() <= 1e-12);
}

TEST_CASE("coherence additivity over classical flags, 200 random ensembles") {
  Rng rng(25);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + static_cast<int>(rng.uniform() * 4);
    const int m = 1 + static_cast<int>(rng.uniform() * 4);
    const PureEnsemble e = random_ensemble(d, m, rng);
    double avg = 0.0;
    for (const auto& member : e.members()) avg += member.weight * c_r(member.state.projector());
    CHECK(std::abs(c_r(qc_state(e)) - avg) <= 1e-9);
  }
}
