/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coh/linalg.hpp"
#include "coh/random.hpp"
#include "coh/types.hpp"

#include <cmath>
#include <complex>

using namespace coh;

namespace {

PureState make_pure(std::initializer_list<Complex> amps) {
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (const Complex& a : amps) v(i++) = a;
  return PureState(std::move(v));
}

DensityOperator diag_density(std::initializer_list<double> d) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()),
                                        static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double v : d) m(i, i) = v, ++i;
  return DensityOperator(std::move(m));
}

}  // namespace

TEST_CASE("density operator invariants") {
  CHECK_NOTHROW(diag_density({0.5, 0.5}));
  ComplexMatrix bad_trace = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityOperator{bad_trace}, InvariantError);
  ComplexMatrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityOperator{neg}, InvariantError);
}

TEST_CASE("pure state normalization invariant") {
  CHECK_NOTHROW(make_pure({1.0, 0.0}));
  ComplexVector v(2);
  v << 0.5, 0.5;
  CHECK_THROWS_AS(PureState{v}, InvariantError);
}

TEST_CASE("dephase groups the diagonal") {
  const GroupedDistribution flat = dephase(maximally_coherent(2, 2).projector());
  REQUIRE(flat.group_count() == 1);
  CHECK(flat.groups()[0].value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(flat.groups()[0].multiplicity == doctest::Approx(2.0));

  const GroupedDistribution two = dephase(diag_density({0.9, 0.1}));
  REQUIRE(two.group_count() == 2);
  CHECK(two.groups()[0].value == doctest::Approx(0.9));
  CHECK(two.groups()[1].value == doctest::Approx(0.1));

  const PureState psi = make_pure({std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2)});
  const GroupedDistribution three = dephase(psi.projector());
  REQUIRE(three.group_count() == 3);
  CHECK(three.groups()[0].value == doctest::Approx(0.5));
  CHECK(three.groups()[1].value == doctest::Approx(0.3));
  CHECK(three.groups()[2].value == doctest::Approx(0.2));
}

TEST_CASE("dephase preserves total probability on random states") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + static_cast<int>(rng.uniform() * 7);
    const DensityOperator rho = random_density(d, d, rng);
    CHECK(dephase(rho).total_mass() == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("fidelity worked values") {
  const DensityOperator rho = diag_density({0.9, 0.1});
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-9));

  const PureState e0 = make_pure({1.0, 0.0});
  const PureState e1 = make_pure({0.0, 1.0});
  CHECK(fidelity(e0.projector(), e1.projector()) == doctest::Approx(0.0).epsilon(1e-9));

  const PureState a = make_pure({std::sqrt(0.9), std::sqrt(0.1)});
  const PureState b = make_pure({std::sqrt(0.5), std::sqrt(0.5)});
  CHECK(fidelity(a.projector(), b.projector()) ==
        doctest::Approx(std::sqrt(0.45) + std::sqrt(0.05)).epsilon(1e-9));
}

TEST_CASE("fidelity of pure states equals overlap modulus") {
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + static_cast<int>(rng.uniform() * 5);
    const PureState a = random_pure_state(d, rng);
    const PureState b = random_pure_state(d, rng);
    const double overlap = std::abs((a.amplitudes().adjoint() * b.amplitudes())(0, 0));
    CHECK(std::abs(fidelity(a.projector(), b.projector()) - overlap) <= 1e-9);
  }
}

TEST_CASE("trace norm worked values") {
  CHECK(trace_norm(ComplexMatrix::Identity(3, 3)) == doctest::Approx(3.0));
  ComplexMatrix d2 = ComplexMatrix::Zero(2, 2);
  d2(0, 0) = 1.0;
  d2(1, 1) = -1.0;
  CHECK(trace_norm(d2) == doctest::Approx(2.0));
  ComplexMatrix diff = ComplexMatrix::Zero(2, 2);
  diff(0, 0) = 0.4;
  diff(1, 1) = -0.4;
  CHECK(trace_norm(diff) == doctest::Approx(0.8));
}

TEST_CASE("positive part trace worked values") {
  ComplexMatrix d2 = ComplexMatrix::Zero(2, 2);
  d2(0, 0) = 1.0;
  d2(1, 1) = -1.0;
  CHECK(positive_part_trace(d2) == doctest::Approx(1.0));
  ComplexMatrix d3 = ComplexMatrix::Zero(2, 2);
  d3(0, 0) = 0.4;
  d3(1, 1) = -0.4;
  CHECK(positive_part_trace(d3) == doctest::Approx(0.4));
  Rng rng(13);
  const DensityOperator rho = random_density(3, 3, rng);
  CHECK(positive_part_trace(rho.matrix()) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("operator sqrt sandwich") {
  Rng rng(14);
  const DensityOperator rho = random_density(3, 3, rng);
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  CHECK((operator_sqrt_sandwich(id, rho) - rho.matrix()).norm() <= 1e-9);
  CHECK((operator_sqrt_sandwich(0.25 * id, rho) - 0.25 * rho.matrix()).norm() <= 1e-9);
  CHECK_THROWS_AS(operator_sqrt_sandwich(2.0 * id, rho), InvariantError);
}

TEST_CASE("maximally coherent state") {
  const PureState phi2 = maximally_coherent(2, 2);
  CHECK(std::abs(phi2.amplitude(0) - Complex(1.0 / std::sqrt(2.0), 0)) <= 1e-12);
  const PureState p1 = maximally_coherent(1, 3);
  CHECK(std::abs(p1.amplitude(0) - Complex(1.0, 0)) <= 1e-12);
  CHECK(std::abs(p1.amplitude(2)) <= 1e-12);
  const PureState p4 = maximally_coherent(4, 4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(p4.amplitude(i) - Complex(0.5, 0)) <= 1e-12);
  CHECK_THROWS_AS(maximally_coherent(4, 3), InvariantError);
}

TEST_CASE("ensemble_from_isometry identity and Hadamard cases") {
  Rng rng(15);
  const DensityOperator half = diag_density({0.5, 0.5});
  const HermitianEig eig = hermitian_eig(half.matrix());
  std::vector<PureState> vecs;
  for (int k = 0; k < 2; ++k) vecs.push_back(PureState(eig.vectors.col(k)));

  // V = I reproduces the eigen-ensemble.
  const PureEnsemble same = ensemble_from_isometry(eig.values, vecs, ComplexMatrix::Identity(2, 2));
  CHECK((same.mixture().matrix() - half.matrix()).norm() <= 1e-9);

  // Hadamard rows produce the {|+>, |->} decomposition of I/2.
  ComplexMatrix had(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  had << s, s, s, -s;
  const PureEnsemble pm = ensemble_from_isometry(eig.values, vecs, had);
  REQUIRE(pm.size() == 2);
  for (const auto& m : pm.members()) {
    CHECK(m.weight == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::abs(std::abs(m.state.amplitude(0)) - s) <= 1e-9);
    CHECK(std::abs(std::abs(m.state.amplitude(1)) - s) <= 1e-9);
  }
}

TEST_CASE("ensemble_from_isometry re-mixes to the input state") {
  Rng rng(16);
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + static_cast<int>(rng.uniform() * 3);
    const int rank = 1 + static_cast<int>(rng.uniform() * d);
    const int m = rank + static_cast<int>(rng.uniform() * 3);
    const DensityOperator rho = random_density(d, rank, rng);
    const HermitianEig eig = hermitian_eig(rho.matrix());
    RealVector vals(rank);
    std::vector<PureState> vecs;
    for (int k = 0; k < rank; ++k) {
      vals(k) = eig.values(d - 1 - k);
      vecs.push_back(PureState(eig.vectors.col(d - 1 - k)));
    }
    vals /= vals.sum();
    const PureEnsemble e = ensemble_from_isometry(vals, vecs, random_isometry(m, rank, rng));
    CHECK((e.mixture().matrix() - rho.matrix()).norm() <= 1e-9);
  }
}

TEST_CASE("random generators are deterministic and valid") {
  Rng a(42), b(42);
  const PureState pa = random_pure_state(5, a);
  const PureState pb = random_pure_state(5, b);
  CHECK((pa.amplitudes() - pb.amplitudes()).norm() == 0.0);

  Rng c(7);
  const DensityOperator rho = random_density(4, 2, c);
  const HermitianEig eig = hermitian_eig(rho.matrix());
  int rank = 0;
  for (int i = 0; i < 4; ++i) rank += eig.values(i) > 1e-9 ? 1 : 0;
  CHECK(rank <= 2);

  Rng d(8);
  const ComplexMatrix v = random_isometry(3, 2, d);
  CHECK((v.adjoint() * v - ComplexMatrix::Identity(2, 2)).norm() <= 1e-12);
}

TEST_CASE("operator-difference inequality property suite") {
  Rng rng(1001);
  for (int t = 0; t < 1000; ++t) {
    const int d = 2 + static_cast<int>(rng.uniform() * 5);
    const ComplexMatrix a = random_hermitian(d, rng);
    const ComplexMatrix b = random_hermitian(d, rng);
    const ComplexMatrix p = random_effect(d, rng);
    const ComplexMatrix diff = a - b;
    const double lhs = (p * diff).trace().real();
    const double mid = positive_part_trace(diff);
    const double rhs = trace_norm(diff);
    CHECK(lhs <= mid + 1e-9);
    CHECK(mid <= rhs + 1e-9);
  }
}

TEST_CASE("gentle-measurement inequality property suite") {
  Rng rng(1002);
  for (int t = 0; t < 1000; ++t) {
    const int d = 2 + static_cast<int>(rng.uniform() * 5);
    const int rank = 1 + static_cast<int>(rng.uniform() * d);
    const DensityOperator rho = random_density(d, rank, rng);
    const ComplexMatrix lambda = random_effect(d, rng);
    const double eps = std::max(1.0 - (lambda * rho.matrix()).trace().real(), 0.0);
    const double dist = trace_norm(rho.matrix() - operator_sqrt_sandwich(lambda, rho));
    CHECK(dist <= 2.0 * std::sqrt(eps) + 1e-9);
  }
}
