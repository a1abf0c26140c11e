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

#include "qduality/error.hpp"
#include "qduality/experiments.hpp"
#include "qduality/linalg.hpp"
#include "qduality/random.hpp"

using namespace qd;

namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
  RealVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double x : values) v(i++) = x;
  return v.cast<Complex>().asDiagonal();
}

ComplexVector bell() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::numbers::sqrt2;
  return v;
}

}  // namespace

TEST_CASE("tensor of kets and operators") {
  const ComplexMatrix k0 = PureState::basis(2, 0).amplitudes();
  const ComplexMatrix k1 = PureState::basis(2, 1).amplitudes();
  const ComplexMatrix ket = tensor(k0, k1);
  CHECK(ket.rows() == 4);
  CHECK(max_abs(ket - ComplexMatrix(PureState::basis(4, 1).amplitudes())) == 0.0);

  CHECK(max_abs(tensor(pauli_z(), pauli_z()) - diag({1, -1, -1, 1})) == 0.0);
  CHECK(max_abs(tensor(identity(2), identity(3)) - identity(6)) == 0.0);
}

TEST_CASE("tensor keeps the factorization of states") {
  const auto a = DensityMatrix::maximally_mixed(2);
  const auto b = DensityMatrix::maximally_mixed(3);
  CHECK(tensor(a, b).dims() == Dims{2, 3});
  const PureState psi = tensor(PureState::basis(2, 1), PureState::basis(2, 0));
  CHECK(psi.dims() == Dims{2, 2});
  CHECK(std::abs(psi[2] - 1.0) == 0.0);
}

TEST_CASE("partial trace examples") {
  SUBCASE("Bell state reduces to the maximally mixed qubit") {
    const auto rho = PureState::from_amplitudes(bell(), {2, 2}).projector();
    const auto reduced = partial_trace(rho, {2, 2}, Keep::First);
    CHECK(max_abs(reduced.matrix() - identity(2) / 2.0) < 1e-15);
    CHECK(reduced.dims() == Dims{2});
  }
  SUBCASE("product state") {
    random::Engine rng(7);
    const auto a = random::density(3, 3, rng);
    const auto b = random::density(2, 2, rng);
    const auto ab = tensor(a, b);
    CHECK(max_abs(partial_trace(ab, {3, 2}, Keep::First).matrix() - a.matrix()) < 1e-14);
    CHECK(max_abs(partial_trace(ab, {3, 2}, Keep::Second).matrix() - b.matrix()) < 1e-14);
  }
  SUBCASE("delayed-choice state with alpha = pi/4, phi = 0") {
    const double a = std::numbers::pi / 4.0;
    const PureState p = particle_state(0.0);
    const PureState w = wave_state(0.0);
    const ComplexVector psi =
        std::cos(a) * tensor(ComplexMatrix(p.amplitudes()),
                             ComplexMatrix(PureState::basis(2, 0).amplitudes())) +
        std::sin(a) * tensor(ComplexMatrix(w.amplitudes()),
                             ComplexMatrix(PureState::basis(2, 1).amplitudes()));
    const auto global = PureState::from_amplitudes(psi, {2, 2}).projector();
    const auto reduced = partial_trace(global, {2, 2}, Keep::First);
    const ComplexMatrix expected =
        0.5 * p.projector().matrix() + 0.5 * w.projector().matrix();
    CHECK(max_abs(reduced.matrix() - expected) < 1e-15);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(partial_trace(DensityMatrix::maximally_mixed(4), {2, 3}, Keep::First),
                    Error);
  }
}

TEST_CASE("partial trace inverts tensor on random states") {
  random::Engine rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rho = random::density(2, random::uniform_index(1, 2, rng), rng);
    const auto sigma = random::density(2, random::uniform_index(1, 2, rng), rng);
    const auto reduced = partial_trace(tensor(rho, sigma), {2, 2}, Keep::First);
    REQUIRE(max_abs(reduced.matrix() - rho.matrix()) < 1e-10);
  }
}

TEST_CASE("eig_hermitian examples") {
  SUBCASE("already diagonal") {
    const Spectrum s = eig_hermitian(diag({0.3, 0.7}));
    CHECK(s.values(0) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(s.values(1) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(std::abs(s.vectors(1, 0) - 1.0) < 1e-15);
    CHECK(std::abs(s.vectors(0, 1) - 1.0) < 1e-15);
  }
  SUBCASE("sigma_x") {
    const Spectrum s = eig_hermitian(pauli_x());
    CHECK(s.values(0) == doctest::Approx(1.0));
    CHECK(s.values(1) == doctest::Approx(-1.0));
    const double h = 1.0 / std::numbers::sqrt2;
    CHECK(std::abs(s.vectors(0, 0) - h) < 1e-15);
    CHECK(std::abs(s.vectors(1, 0) - h) < 1e-15);
    CHECK(std::abs(s.vectors(0, 1) - h) < 1e-15);
    CHECK(std::abs(s.vectors(1, 1) + h) < 1e-15);
  }
  SUBCASE("rank-one projector") {
    const Spectrum s = eig_hermitian(particle_state(std::numbers::pi / 2).projector().matrix());
    CHECK(s.values(0) == doctest::Approx(1.0));
    CHECK(std::abs(s.values(1)) < 1e-15);
  }
  SUBCASE("non-Hermitian input is rejected") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(eig_hermitian(m), Error);
  }
  SUBCASE("degenerate spectrum is ordered deterministically") {
    const Spectrum s = eig_hermitian(identity(3) / 3.0);
    CHECK(max_abs(s.vectors - identity(3)) < 1e-15);
  }
}

TEST_CASE("eig_hermitian reconstruction on random Hermitian matrices") {
  random::Engine rng(2024);
  double worst_reconstruction = 0.0;
  double worst_orthonormality = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Index dim = random::uniform_index(2, 16, rng);
    const ComplexMatrix m = random::hermitian(dim, rng);
    const Spectrum s = eig_hermitian(m);
    for (Index i = 1; i < dim; ++i) REQUIRE(s.values(i - 1) >= s.values(i));
    worst_reconstruction =
        std::max(worst_reconstruction, max_abs(from_spectrum(s, s.values) - m));
    worst_orthonormality = std::max(
        worst_orthonormality, max_abs(s.vectors.adjoint() * s.vectors - identity(dim)));
    // First nonzero component of each eigenvector is real-positive.
    for (Index c = 0; c < dim; ++c) {
      for (Index r = 0; r < dim; ++r) {
        if (std::abs(s.vectors(r, c)) > 1e-12) {
          REQUIRE(s.vectors(r, c).real() > 0.0);
          REQUIRE(std::abs(s.vectors(r, c).imag()) < 1e-12);
          break;
        }
      }
    }
  }
  CHECK(worst_reconstruction < 1e-8);
  CHECK(worst_orthonormality < 1e-8);
}

TEST_CASE("hs_norm_sq") {
  CHECK(hs_norm_sq(identity(2)) == 2.0);
  CHECK(hs_norm_sq(ComplexMatrix::Zero(3, 3)) == 0.0);
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 0.5;
  CHECK(hs_norm_sq(m) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(hs_norm_sq(ComplexMatrix::Zero(2, 3)), Error);

  random::Engine rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = random::uniform_index(2, 8, rng);
    const ComplexMatrix g = random::ginibre(dim, dim, rng);
    REQUIRE(std::abs(hs_norm_sq(g) - (g.adjoint() * g).trace().real()) < 1e-12);
    const auto rho = random::density(dim, dim, rng);
    const Spectrum s = eig_hermitian(rho.matrix());
    REQUIRE(std::abs(hs_norm_sq(rho.matrix()) - s.values.squaredNorm()) < 1e-10);
  }
}

TEST_CASE("validate_density") {
  CHECK_NOTHROW(validate_density(identity(2) / 2.0));

  try {
    validate_density(diag({1.2, -0.2}));
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidState);
    CHECK(std::string(e.what()).find("negative") != std::string::npos);
  }

  ComplexVector plus(2);
  plus << 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2;
  const ComplexMatrix werner = 0.5 * identity(2) / 2.0 + 0.5 * outer(plus, plus);
  CHECK_NOTHROW(validate_density(werner));

  SUBCASE("small violations are clipped") {
    const auto rho = validate_density(diag({1.0 + 5e-10, -5e-10}));
    CHECK(rho(1, 1).real() >= 0.0);
    CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-15);
  }
  SUBCASE("trace and Hermiticity") {
    CHECK_THROWS_AS(validate_density(identity(2)), Error);
    ComplexMatrix m = identity(2) / 2.0;
    m(0, 1) = 0.1;
    CHECK_THROWS_AS(validate_density(m), Error);
    CHECK_THROWS_AS(validate_density(ComplexMatrix::Zero(2, 3)), Error);
  }
  SUBCASE("dims must factor the dimension") {
    CHECK_THROWS_AS(validate_density(identity(4) / 4.0, kStateTol, {2, 3}), Error);
    CHECK(validate_density(identity(4) / 4.0, kStateTol, {2, 2}).dims() == Dims{2, 2});
  }
}

TEST_CASE("pure state normalization") {
  ComplexVector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(PureState::from_amplitudes(v), Error);
  CHECK(PureState::normalized(v).amplitudes().norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(PureState::normalized(ComplexVector::Zero(2)), Error);
}
