// Copyright 2026 The qduality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qduality/channels.hpp"
#include "qduality/error.hpp"
#include "qduality/experiments.hpp"
#include "qduality/info.hpp"
#include "qduality/random.hpp"
#include "test_support.hpp"

using namespace qd;
using namespace qd::test;

namespace {

const auto kZ = ReferenceObservable::computational(2);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// Conditional state displayed for the wave detector, on qubits (q0, q1).
ComplexMatrix displayed_conditional(double x, Complex a, Complex b, int k) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  const Index s10 = 2, s01 = 1;
  const double sign = k == 0 ? 1.0 : -1.0;
  const Complex i(0.0, 1.0);
  m(s10, s10) = (1.0 - x) / 2.0 + x * std::norm(a);
  m(s01, s01) = (1.0 - x) / 2.0 + x * std::norm(b);
  m(s01, s10) = sign * i * x * std::conj(a) * b;
  m(s10, s01) = -sign * i * x * a * std::conj(b);
  return m;
}

}  // namespace

TEST_CASE("dephase examples") {
  const auto rho = diag_state({0.3, 0.7});
  CHECK(max_abs(dephase(rho, kZ).matrix() - rho.matrix()) == 0.0);

  const auto plus = pure(ket({1.0, 1.0}));
  CHECK(max_abs(dephase(plus, kZ).matrix() - identity(2) / 2.0) < 1e-15);

  for (double phi : {0.0, 0.4, 1.3, 2.9, 5.0}) {
    const auto p = particle_state(phi).projector();
    CHECK(max_abs(dephase(p, kZ).matrix() - identity(2) / 2.0) < 1e-15);
  }

  CHECK(code_of([] { dephase(DensityMatrix::maximally_mixed(3), kZ); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("dephase is relative to the chosen basis") {
  const auto zero = pure(ket({1.0, 0.0}));
  CHECK(max_abs(dephase(zero, kZ).matrix() - zero.matrix()) < 1e-15);
  CHECK(max_abs(dephase(zero, sigma_x_basis()).matrix() - identity(2) / 2.0) < 1e-15);
}

TEST_CASE("measure_select examples") {
  const auto plus = pure(ket({1.0, 1.0}));
  const Outcome o = measure_select(plus, kZ, 0);
  CHECK(o.probability == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(max_abs(o.state.matrix() - pure(ket({1.0, 0.0})).matrix()) < 1e-15);

  const auto zero = pure(ket({1.0, 0.0}));
  CHECK(code_of([&] { measure_select(zero, kZ, 1); }) == ErrorCode::ImpossibleOutcome);

  const auto one = pure(ket({0.0, 1.0}));
  const Outcome definite = measure_select(one, kZ, 1);
  CHECK(definite.probability == doctest::Approx(1.0));
  CHECK(max_abs(definite.state.matrix() - one.matrix()) < 1e-15);

  CHECK(code_of([&] { measure_select(one, kZ, 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("unread measurement reproduces the dephased state") {
  random::Engine rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = random::uniform_index(2, 6, rng);
    const auto rho = random::full_rank_density(dim, rng);
    const auto obs = random::basis(dim, rng);
    ComplexMatrix mixture = ComplexMatrix::Zero(dim, dim);
    double total = 0.0;
    for (Index k = 0; k < dim; ++k) {
      const Outcome o = measure_select(rho, obs, k);
      REQUIRE(o.probability >= 0.0);
      REQUIRE(o.probability <= 1.0);
      REQUIRE(max_abs(o.state.matrix() - obs.projector(k)) < 1e-10);
      total += o.probability;
      mixture += o.probability * o.state.matrix();
    }
    REQUIRE(std::abs(total - 1.0) < 1e-12);
    REQUIRE(max_abs(mixture - dephase(rho, obs).matrix()) < 1e-10);
  }
}

TEST_CASE("dephase is idempotent") {
  random::Engine rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = random::uniform_index(2, 8, rng);
    const auto rho = random::density(dim, random::uniform_index(1, dim, rng), rng);
    const auto obs = random::basis(dim, rng);
    const auto once = dephase(rho, obs);
    REQUIRE(max_abs(dephase(once, obs).matrix() - once.matrix()) < 1e-12);
  }
}

TEST_CASE("joint entropy of a mixture of definite paths") {
  random::Engine rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = random::uniform_index(2, 8, rng);
    const auto p = random::probabilities(dim, rng);
    const auto obs = random::basis(dim, rng);
    ComplexMatrix mixture = ComplexMatrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k)
      mixture += p[static_cast<std::size_t>(k)] * obs.projector(k);
    const double s = von_neumann_entropy(DensityMatrix::unchecked(mixture));
    REQUIRE(std::abs(s - shannon(p)) < 1e-10);
  }
}

TEST_CASE("coherences are commutators with the projectors") {
  random::Engine rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = random::uniform_index(2, 8, rng);
    const ComplexMatrix j = random::hermitian(dim, rng);
    const auto obs = random::basis(dim, rng);
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k) {
      const ComplexMatrix pk = obs.projector(k);
      sum += (j * pk - pk * j) * pk;
    }
    REQUIRE(max_abs(j - dephase(j, obs) - sum) < 1e-10);
  }
}

TEST_CASE("measure_select_joint on the wave detector") {
  SUBCASE("x = 1, balanced amplitudes, first detector") {
    const auto input = WernerInput::create(1.0, kInvSqrt2, kInvSqrt2);
    const Outcome o = measure_select_joint(wave_detector_state(input), {2, 4}, kZ, 0);
    CHECK(o.probability == doctest::Approx(0.5).epsilon(1e-14));
    // (|10> + i|01>)/sqrt2 on qubits (q0, q1).
    const auto expected = pure(ket({0.0, Complex(0.0, 1.0), 1.0, 0.0}));
    CHECK(max_abs(o.state.matrix() - expected.matrix()) < 1e-14);
  }
  SUBCASE("x = 1 for general amplitudes") {
    const Complex a = std::polar(0.6, 0.4), b = std::polar(0.8, -1.1);
    const auto input = WernerInput::create(1.0, a, b);
    const Outcome o = measure_select_joint(wave_detector_state(input), {2, 4}, kZ, 0);
    const auto expected = pure(ket({0.0, Complex(0.0, 1.0) * b, a, 0.0}));
    CHECK(max_abs(o.state.matrix() - expected.matrix()) < 1e-14);
  }
  SUBCASE("general Werner inputs match the displayed conditional state") {
    double worst = 0.0;
    for (double x : {0.0, 0.1, 0.35, 0.5, 0.8, 1.0}) {
      for (double mag : {0.0, 0.2, 0.5, kInvSqrt2, 0.9, 1.0}) {
        const Complex a = std::polar(mag, 0.3);
        const Complex b = std::polar(std::sqrt(1.0 - mag * mag), -0.7);
        const auto input = WernerInput::create(x, a, b);
        const auto evolved = wave_detector_state(input);
        for (int k = 0; k < 2; ++k) {
          const Outcome o = measure_select_joint(evolved, {2, 4}, kZ, k);
          worst = std::max(worst, max_abs(o.state.matrix() -
                                          displayed_conditional(x, a, b, k)));
        }
      }
    }
    CHECK(worst < 1e-10);
  }
  SUBCASE("product states carry no correlation") {
    random::Engine rng(3);
    const auto a = random::full_rank_density(2, rng);
    const auto b = random::density(3, 2, rng);
    for (Index k = 0; k < 2; ++k) {
      const Outcome o = measure_select_joint(tensor(a, b), {2, 3}, kZ, k);
      CHECK(o.probability == doctest::Approx(a(k, k).real()).epsilon(1e-12));
      CHECK(max_abs(o.state.matrix() - b.matrix()) < 1e-12);
      CHECK(o.state.dims() == Dims{3});
    }
  }
  SUBCASE("errors") {
    const auto product = tensor(pure(ket({1.0, 0.0})), DensityMatrix::maximally_mixed(2));
    CHECK(code_of([&] { measure_select_joint(product, {2, 2}, kZ, 1); }) ==
          ErrorCode::ImpossibleOutcome);
    CHECK(code_of([&] { measure_select_joint(product, {2, 3}, kZ, 0); }) ==
          ErrorCode::DimensionMismatch);
    CHECK(code_of([&] {
            measure_select_joint(product, {2, 2}, ReferenceObservable::computational(3), 0);
          }) == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("purify examples") {
  SUBCASE("maximally mixed qubit") {
    const PureState psi = purify(DensityMatrix::maximally_mixed(2));
    CHECK(psi.dims() == Dims{2, 2});
    CHECK(max_abs(psi.amplitudes() - ket({kInvSqrt2, 0.0, 0.0, kInvSqrt2})) < 1e-15);
  }
  SUBCASE("pure input") {
    const ComplexVector v = ket({0.6, Complex(0.0, 0.8)});
    const PureState psi = purify(pure(v));
    CHECK(psi.dims() == Dims{2, 1});
    CHECK(std::abs(std::abs(v.dot(psi.amplitudes())) - 1.0) < 1e-14);
  }
  SUBCASE("diagonal state") {
    const double p = 0.7;
    const PureState psi = purify(diag_state({p, 1.0 - p}));
    CHECK(psi.dims() == Dims{2, 2});
    CHECK(std::abs(psi[0] - std::sqrt(p)) < 1e-15);
    CHECK(std::abs(psi[3] - std::sqrt(1.0 - p)) < 1e-15);
    CHECK(std::abs(psi[1]) < 1e-15);
    CHECK(std::abs(psi[2]) < 1e-15);
    // Informer index follows the descending eigenvalue order.
    const PureState flipped = purify(diag_state({1.0 - p, p}));
    CHECK(std::abs(flipped[2] - std::sqrt(p)) < 1e-15);
    CHECK(std::abs(flipped[1] - std::sqrt(1.0 - p)) < 1e-15);
  }
}

TEST_CASE("purification round trip") {
  random::Engine rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = random::uniform_index(2, 8, rng);
    const Index rank = random::uniform_index(1, dim, rng);
    const auto rho = random::density(dim, rank, rng);
    const PureState psi = purify(rho);
    REQUIRE(psi.dims()[1] == rank);
    const auto back = partial_trace(psi.projector(), {dim, psi.dims()[1]}, Keep::First);
    REQUIRE(max_abs(back.matrix() - rho.matrix()) < 1e-9);
  }
}

TEST_CASE("reduced_from_informer examples") {
  const ComplexVector c = ket({0.6, Complex(0.0, 0.48), 0.64});
  SUBCASE("orthogonal informer states") {
    const auto rho = reduced_from_informer(InformerModel::create(c, identity(3)));
    RealVector expected(3);
    expected << 0.36, 0.2304, 0.4096;
    CHECK(max_abs(rho.matrix() - ComplexMatrix(expected.cast<Complex>().asDiagonal())) <
          1e-15);
    CHECK(wavelike_info(rho, ReferenceObservable::computational(3), TsallisOrder(1.0)) ==
          doctest::Approx(0.0));
  }
  SUBCASE("identical informer states") {
    const auto rho =
        reduced_from_informer(InformerModel::create(c, ComplexMatrix::Ones(3, 3)));
    CHECK(max_abs(rho.matrix() - outer(c, c)) < 1e-15);
  }
  SUBCASE("two branches with partial overlap") {
    const Complex a = std::polar(0.6, 0.2), b = std::polar(0.8, 1.4);
    const double eta = 0.55;
    const auto rho = reduced_from_informer(InformerModel::two_branch(a, b, eta));
    CHECK(std::abs(rho(0, 1) - a * std::conj(b) * eta) < 1e-15);
    CHECK(wavelike_info_hs(rho, kZ) ==
          doctest::Approx(2.0 * std::norm(a * b) * eta * eta).epsilon(1e-12));
  }
  SUBCASE("invalid models") {
    ComplexMatrix g = ComplexMatrix::Ones(2, 2) * 2.0;
    g(0, 0) = g(1, 1) = 1.0;
    CHECK(code_of([&] { InformerModel::create(ket({0.6, 0.8}), g); }) ==
          ErrorCode::InvalidArgument);
    CHECK(code_of([&] { InformerModel::two_branch(0.6, 0.8, 1.5); }) ==
          ErrorCode::InvalidArgument);
    CHECK(code_of([&] { InformerModel::two_branch(0.6, 0.9, 0.5); }) ==
          ErrorCode::InvalidArgument);
  }
}

TEST_CASE("reference observables") {
  CHECK(code_of([] {
          ReferenceObservable::from_vectors({ket({1.0, 0.0}), ket({1.0, 1.0})});
        }) == ErrorCode::InvalidArgument);
  const auto obs = ReferenceObservable::eigenbasis(pauli_x());
  CHECK(max_abs(obs.projector(0) - pure(ket({1.0, 1.0})).matrix()) < 1e-15);
}
