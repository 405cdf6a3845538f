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
#include "coh/rates.hpp"

#include <algorithm>
#include <cmath>

using namespace coh;

namespace {

PureState make_pure(std::initializer_list<double> amps) {
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (double a : amps) v(i++) = a;
  return PureState(std::move(v));
}

PureEnsemble skew_pair() {
  return PureEnsemble({{0.5, make_pure({std::sqrt(0.9), std::sqrt(0.1)})},
                       {0.5, make_pure({std::sqrt(0.1), std::sqrt(0.9)})}});
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

TEST_CASE("pure rate worked values") {
  const PureState psi = make_pure({std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2)});
  const RateReport exact = pure_rate(psi, 0.0);
  CHECK(exact.m_achievable == 2);
  CHECK(exact.rate_lower_bits == doctest::Approx(1.0).epsilon(1e-9));

  const RateReport smoothed = pure_rate(psi, 0.05);
  CHECK(smoothed.m_achievable == 3);
  CHECK(smoothed.rate_lower_bits == doctest::Approx(std::log2(3.0)).epsilon(1e-9));
  CHECK(smoothed.rate_upper_bits >= smoothed.rate_lower_bits - 1e-9);

  const RateReport flat = pure_rate(maximally_coherent(4, 4), 0.05);
  CHECK(flat.rate_lower_bits == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(flat.rate_upper_bits == doctest::Approx(2.0).epsilon(1e-9));

  CHECK_THROWS_AS(pure_rate(psi, 0.5), InvariantError);
}

TEST_CASE("pure rate bounds and achievability on random states") {
  Rng rng(51);
  for (int t = 0; t < 100; ++t) {
    const int d = 2 + static_cast<int>(rng.uniform() * 6);
    const PureState psi = random_pure_state(d, rng);
    std::int64_t prev = 0;
    for (double eps : {0.0, 0.01, 0.05, 0.1}) {
      const RateReport r = pure_rate(psi, eps);
      CHECK(r.rate_lower_bits <= r.rate_upper_bits + 1e-9);
      CHECK(r.channel_fidelity_sq >= 1.0 - eps - 1e-9);
      CHECK(r.m_achievable >= prev);
      prev = r.m_achievable;
    }
  }
}

TEST_CASE("ensemble feasibility worked values") {
  const PureEnsemble e = skew_pair();
  CHECK(ensemble_feasible(e, 2, 0.2));        // average fidelity^2 is exactly 0.8
  CHECK_FALSE(ensemble_feasible(e, 2, 0.1));  // 0.8 < 0.9
  const PureEnsemble flat({{0.5, maximally_coherent(2, 2)}, {0.5, maximally_coherent(2, 2)}});
  for (double eps : {0.0, 0.1}) CHECK(ensemble_feasible(flat, 2, eps));
}

TEST_CASE("ensemble rate worked values") {
  const PureEnsemble e = skew_pair();
  const RateReport boundary = ensemble_rate(e, 0.2);
  CHECK(boundary.m_achievable == 2);
  CHECK(boundary.rate_lower_bits == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ensemble_rate(e, 0.0).m_achievable == 1);
}

TEST_CASE("single-member ensemble matches the pure rate") {
  Rng rng(52);
  for (int t = 0; t < 25; ++t) {
    const int d = 2 + static_cast<int>(rng.uniform() * 5);
    const PureState psi = random_pure_state(d, rng);
    const PureEnsemble single({{1.0, psi}});
    for (double eps : {0.0, 0.05, 0.1}) {
      const RateReport p = pure_rate(psi, eps);
      const RateReport s = ensemble_rate(single, eps);
      CHECK(p.m_achievable == s.m_achievable);
      CHECK(p.rate_upper_bits == doctest::Approx(s.rate_upper_bits).epsilon(1e-9));
    }
  }
}

TEST_CASE("ensemble dominance and epsilon monotonicity on random ensembles") {
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + static_cast<int>(rng.uniform() * 4);
    const int m = 1 + static_cast<int>(rng.uniform() * 3);
    const PureEnsemble e = random_ensemble(d, m, rng);
    std::int64_t prev = 0;
    for (double eps : {0.0, 0.05, 0.1}) {
      const RateReport r = ensemble_rate(e, eps);
      std::int64_t min_member = r.m_achievable;
      for (const auto& member : e.members()) {
        min_member = std::min(min_member, pure_rate(member.state, eps).m_achievable);
      }
      CHECK(r.m_achievable >= min_member);  // averaged feasibility dominates
      CHECK(r.m_achievable >= prev);
      CHECK(r.channel_fidelity_sq >= 1.0 - eps - 1e-9);
      prev = r.m_achievable;
    }
  }
}

TEST_CASE("minimum dephased coherence estimate") {
  CHECK(f_min_delta(skew_pair()) == doctest::Approx(0.152).epsilon(1e-3));
  const PureEnsemble flat({{1.0, maximally_coherent(4, 4)}});
  CHECK(f_min_delta(flat) == doctest::Approx(2.0).epsilon(1e-9));
  const PureEnsemble with_basis({{0.5, maximally_coherent(2, 2)}, {0.5, make_pure({1.0, 0.0})}});
  CHECK(f_min_delta(with_basis) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("assisted rate worked cases") {
  SUBCASE("pure input equals the pure rate") {
    Rng rng(54);
    const PureState psi = random_pure_state(3, rng);
    const RateReport assisted = assisted_rate(psi.projector(), 0.05, 3, 4, 9);
    const RateReport direct = pure_rate(psi, 0.05);
    CHECK(assisted.m_achievable >= direct.m_achievable);
  }
  SUBCASE("maximally mixed qubit reaches rate 1 at epsilon 0") {
    const RateReport r = assisted_rate(diag_density({0.5, 0.5}), 0.0, 2, 16, 1);
    CHECK(r.m_achievable == 2);
    CHECK(r.rate_lower_bits == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d_a_closed_form(diag_density({0.5, 0.5})) == doctest::Approx(1.0));
  }
  SUBCASE("dominates the eigen-ensemble rate") {
    Rng rng(55);
    for (int t = 0; t < 10; ++t) {
      const int d = 2 + static_cast<int>(rng.uniform() * 2);
      const DensityOperator rho = random_density(d, d, rng);
      const RateReport r = assisted_rate(rho, 0.05, d, 4, 100 + static_cast<std::uint64_t>(t));
      const HermitianEig eig = hermitian_eig(rho.matrix());
      std::vector<EnsembleMember> eigen;
      for (int k = 0; k < d; ++k) {
        if (eig.values(k) > 1e-10) eigen.push_back({eig.values(k), PureState(eig.vectors.col(k))});
      }
      const RateReport base = ensemble_rate(PureEnsemble(std::move(eigen)), 0.05);
      CHECK(r.m_achievable >= base.m_achievable);
    }
  }
  SUBCASE("member count below rank is rejected") {
    CHECK_THROWS_AS(assisted_rate(diag_density({0.5, 0.5}), 0.0, 1, 4, 1), InvariantError);
  }
}

TEST_CASE("n-copy sweep basics") {
  SUBCASE("flat singleton ensemble stays at rate 1 per copy") {
    const PureEnsemble flat({{1.0, maximally_coherent(2, 2)}});
    const std::vector<SweepRow> rows = ncopy_sweep(flat, 0.01, 6);
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows) CHECK(r.rate_per_copy == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("n = 1 reproduces ensemble_rate") {
    Rng rng(56);
    for (int t = 0; t < 10; ++t) {
      const PureEnsemble e = random_ensemble(2, 2, rng);
      for (double eps : {0.05, 0.2}) {
        const std::vector<SweepRow> rows = ncopy_sweep(e, eps, 1);
        REQUIRE(rows.size() == 1);
        const RateReport direct = ensemble_rate(e, eps);
        CHECK(rows[0].rate_bits == doctest::Approx(direct.rate_lower_bits).epsilon(1e-9));
      }
    }
  }
  SUBCASE("target columns carry the analytic comparison values") {
    const std::vector<SweepRow> rows = ncopy_sweep(skew_pair(), 0.05, 3);
    for (const auto& r : rows) {
      CHECK(r.target_avg_bits == doctest::Approx(0.46899).epsilon(1e-4));
      CHECK(r.target_da_bits == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(rows[0].rate_bits == doctest::Approx(0.0).epsilon(1e-9));
  }
  SUBCASE("per-copy rate grows from n = 5 to n = 30") {
    const std::vector<SweepRow> rows = ncopy_sweep(skew_pair(), 0.05, 30);
    REQUIRE(rows.size() == 30);
    CHECK(rows[29].rate_per_copy > rows[4].rate_per_copy);
  }
}
