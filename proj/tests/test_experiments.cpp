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
#include <string>

#include "qduality/error.hpp"
#include "qduality/experiments.hpp"
#include "qduality/info.hpp"
#include "qduality/nonlocality.hpp"
#include "test_support.hpp"

using namespace qd;
using namespace qd::test;

namespace {

constexpr double kPi = std::numbers::pi;
const double kLn2 = std::numbers::ln2;

// Every I_w/I_p pair in the report sums to the maximal entropy.
void check_complementarity(const ExperimentReport& report, Index dim) {
  int pairs = 0;
  for (const auto& [name, value] : report.scalars()) {
    const auto at = name.find("I_w_q");
    if (at == std::string::npos) continue;
    std::string partner = name;
    partner.replace(at, 3, "I_p");
    const double q = std::stod(name.substr(at + 5));
    REQUIRE(report.has_scalar(partner));
    CHECK(std::abs(value + report.scalar(partner) - max_entropy(dim, TsallisOrder(q))) <
          1e-10);
    ++pairs;
  }
  CHECK(pairs > 0);
}

}  // namespace

TEST_CASE("beam splitter and phase conventions") {
  const ComplexVector zero = PureState::basis(2, 0).amplitudes();
  for (int i = 0; i < 64; ++i) {
    const double phi = 2.0 * kPi * i / 64.0;
    const ComplexVector mid = phase_shifter(phi) * beam_splitter() * zero;
    CHECK(std::abs(std::abs(particle_state(phi).amplitudes().dot(mid)) - 1.0) < 1e-12);
    const ComplexVector out = beam_splitter() * mid;
    CHECK(std::abs(std::abs(wave_state(phi).amplitudes().dot(out)) - 1.0) < 1e-10);
  }
  CHECK(max_abs(beam_splitter().adjoint() * beam_splitter() - identity(2)) < 1e-15);
  CHECK(wrap_phase(2.0 * kPi) == 0.0);
  CHECK(wrap_phase(-0.5) == doctest::Approx(2.0 * kPi - 0.5));
  CHECK_THROWS_AS(wrap_phase(std::nan("")), Error);
}

TEST_CASE("mzi without the second beam splitter") {
  for (double phi : {0.0, 1.0, kPi, 4.5}) {
    const auto r = mzi_run({phi, Bs2Mode::Absent});
    CHECK(r.scalar("p_det0") == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.scalar("p_det1") == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.scalar("mid_I_w_q1") == doctest::Approx(kLn2).epsilon(1e-13));
    check_complementarity(r, 2);
  }
}

TEST_CASE("mzi with the second beam splitter") {
  for (int i = 0; i <= 40; ++i) {
    const double phi = 2.0 * kPi * i / 40.0;
    const auto r = mzi_run({phi, Bs2Mode::Present});
    const double x = std::pow(std::cos(phi / 2.0), 2);
    const double y = 1.0 - x;
    CHECK(r.scalar("p_det0") == doctest::Approx(y).epsilon(1e-12));
    CHECK(r.scalar("p_det1") == doctest::Approx(x).epsilon(1e-12));
    const double h = (x > 0 ? -x * std::log(x) : 0.0) + (y > 0 ? -y * std::log(y) : 0.0);
    CHECK(std::abs(r.scalar("pre_I_w_q1") - h) < 1e-10);
    check_complementarity(r, 2);
  }
  SUBCASE("phi = pi/2 makes the particle and wave states coincide") {
    const auto present = mzi_run({kPi / 2.0, Bs2Mode::Present});
    const auto absent = mzi_run({kPi / 2.0, Bs2Mode::Absent});
    CHECK(present.scalar("p_det0") == doctest::Approx(absent.scalar("p_det0")));
    CHECK(present.scalar("pre_I_w_q1") == doctest::Approx(absent.scalar("mid_I_w_q1")));
  }
  SUBCASE("extra Tsallis orders") {
    const auto r = mzi_run({0.3, Bs2Mode::Present}, {1.0, 2.0, 3.0});
    CHECK(r.has_scalar("pre_I_w_q3"));
    check_complementarity(r, 2);
  }
}

TEST_CASE("dce examples") {
  const auto r = dce_analyze(kPi / 4.0, 0.0);
  CHECK(r.scalar("I_p_q2") == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(r.scalar("E_q2") == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.scalar("I_w_q2") == doctest::Approx(0.125).epsilon(1e-12));

  const auto out = dce_analyze(0.0, 1.1);
  CHECK(std::abs(out.scalar("I_p_q2")) < 1e-14);
  CHECK(out.scalar("I_w_q2") == doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_AS(dce_analyze(-0.1, 0.0), Error);
  CHECK_THROWS_AS(dce_analyze(2.0, 0.0), Error);
  CHECK_NOTHROW(dce_analyze(1.5707963268, 0.0));
}

TEST_CASE("dce closed forms on a grid") {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double a = (kPi / 2.0) * i / 19.0;
      const double phi = 2.0 * kPi * j / 20.0;
      const auto r = dce_analyze(a, phi);
      const double ip = 0.5 * (1.0 - std::pow(std::cos(a), 4)) * std::pow(std::cos(phi), 2);
      const double e = 0.25 * std::pow(std::sin(2.0 * a), 2) * std::pow(std::cos(phi), 2);
      worst = std::max(worst, std::abs(r.scalar("I_p_q2") - ip));
      worst = std::max(worst, std::abs(r.scalar("E_q2") - e));
      worst = std::max(worst, std::abs(r.scalar("I_w_q2") + r.scalar("I_p_q2") - 0.5));
      if (i > 0 && i < 19) REQUIRE(r.scalar("I_p_q2") < 0.5);
      check_complementarity(r, 2);
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("dce with the second beam splitter fully in shows morphing") {
  for (int j = 0; j < 24; ++j) {
    const double phi = 2.0 * kPi * j / 24.0;
    const auto r = dce_analyze(kPi / 2.0, phi);
    const bool edge = std::abs(std::cos(phi)) > 1.0 - 1e-12 || std::abs(std::cos(phi)) < 1e-12;
    if (!edge) {
      CHECK(r.scalar("I_w_q2") > 0.0);
      CHECK(r.scalar("I_p_q2") > 0.0);
    }
  }
}

TEST_CASE("controlled beam splitter reproduces the superposed device state") {
  for (double a : {0.0, 0.3, kPi / 4.0, 1.2, kPi / 2.0}) {
    for (double phi : {0.0, 0.8, 2.5, 5.9}) {
      const ComplexVector p = particle_state(phi).amplitudes();
      const ComplexVector w = wave_state(phi).amplitudes();
      const ComplexVector out = PureState::basis(2, 0).amplitudes();
      const ComplexVector in = PureState::basis(2, 1).amplitudes();
      const ComplexVector literal =
          std::cos(a) * tensor(ComplexMatrix(p), ComplexMatrix(out)) +
          std::sin(a) * tensor(ComplexMatrix(w), ComplexMatrix(in));
      const auto expected = partial_trace(outer(literal, literal), {2, 2}, Keep::First);
      const auto r = dce_analyze(a, phi);
      CHECK(max_abs(r.state("quanton").matrix() - expected) < 1e-12);
    }
  }
}

TEST_CASE("wave detector examples") {
  SUBCASE("maximal nonlocality") {
    const auto r = wave_detector_run(WernerInput::create(1.0, kInvSqrt2, kInvSqrt2));
    for (int k = 0; k < 2; ++k) {
      const std::string tag = "_click" + std::to_string(k);
      CHECK(r.scalar("N_l" + tag) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(r.scalar("E" + tag) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(r.scalar("B_max" + tag) == doctest::Approx(2.0 * std::numbers::sqrt2));
    }
    CHECK(r.scalar("input_I_w_q1") == doctest::Approx(kLn2).epsilon(1e-12));
    check_complementarity(r, 2);
  }
  SUBCASE("definite path") {
    const auto r = wave_detector_run(WernerInput::create(1.0, 1.0, 0.0));
    CHECK(std::abs(r.scalar("N_l_click0")) < 1e-14);
    CHECK(std::abs(r.scalar("E_click0")) < 1e-12);
  }
  SUBCASE("half-weight Werner input") {
    const auto r = wave_detector_run(WernerInput::create(0.5, kInvSqrt2, kInvSqrt2));
    CHECK(r.scalar("N_l_click0") == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r.scalar("E_click0") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.scalar("input_I_w_q2") == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(r.scalar("Iw2_minus_2Nl") == doctest::Approx(0.125 - 0.5).epsilon(1e-12));
  }
  SUBCASE("invalid inputs") {
    CHECK_THROWS_AS(WernerInput::create(1.5, 1.0, 0.0), Error);
    CHECK_THROWS_AS(WernerInput::create(0.5, 1.0, 1.0), Error);
    const auto typed = WernerInput::create(1.0, 0.70710678, 0.70710678);
    CHECK(std::norm(typed.amp_alpha()) + std::norm(typed.amp_beta()) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("wave detector click statistics and symmetry") {
  for (double x : {0.0, 0.25, 0.6, 1.0}) {
    for (double phase : {0.0, 0.7, 2.1}) {
      const auto r = wave_detector_run(
          WernerInput::create(x, kInvSqrt2, std::polar(kInvSqrt2, phase)));
      CHECK(r.scalar("p_click0") == doctest::Approx(0.5).epsilon(1e-10));
      CHECK(r.scalar("p_click1") == doctest::Approx(0.5).epsilon(1e-10));
    }
    for (double mag : {0.1, 0.45, 0.8}) {
      const auto r = wave_detector_run(
          WernerInput::create(x, mag, std::polar(std::sqrt(1.0 - mag * mag), 1.0)));
      CHECK(std::abs(r.scalar("N_l_click0") - r.scalar("N_l_click1")) < 1e-12);
      CHECK(std::abs(r.scalar("E_click0") - r.scalar("E_click1")) < 1e-12);
      CHECK(r.scalar("p_click0") + r.scalar("p_click1") == doctest::Approx(1.0));
      check_complementarity(r, 2);
    }
  }
}

TEST_CASE("measurement model perspectives") {
  const ComplexVector c = ket({0.6, Complex(0.0, 0.48), 0.64});
  std::vector<double> weights{0.36, 0.2304, 0.4096};

  SUBCASE("Alice reads the pointer") {
    for (Index k = 0; k < 3; ++k) {
      const auto r = measurement_model(c, Perspective::alice(k));
      CHECK(std::abs(r.scalar("quanton_I_w_q1")) < 1e-12);
      CHECK(std::abs(r.scalar("pointer_I_w_q1")) < 1e-12);
      CHECK(r.scalar("p_outcome") == doctest::Approx(weights[k]).epsilon(1e-14));
      CHECK(max_abs(r.state("quanton").matrix() - PureState::basis(3, k).projector().matrix()) <
            1e-12);
      CHECK(r.scalar("pre_I_w_q1") == doctest::Approx(shannon(weights)).epsilon(1e-12));
      check_complementarity(r, 3);
    }
  }
  SUBCASE("Bob does not know the outcome") {
    const auto r = measurement_model(c, Perspective::bob());
    RealVector w(3);
    w << 0.36, 0.2304, 0.4096;
    CHECK(max_abs(r.state("quanton").matrix() - ComplexMatrix(w.cast<Complex>().asDiagonal())) <
          1e-12);
    CHECK(std::abs(r.scalar("quanton_I_w_q1")) < 1e-12);
    CHECK(std::abs(r.scalar("pointer_I_w_q1")) < 1e-12);
    CHECK(r.scalar("pre_H") == doctest::Approx(shannon(weights)).epsilon(1e-14));
    CHECK_FALSE(r.has_scalar("p_outcome"));
    check_complementarity(r, 3);
  }
  SUBCASE("definite path input") {
    const ComplexVector e0 = ket({1.0, 0.0, 0.0, 0.0});
    for (auto view : {Perspective::alice(0), Perspective::bob()}) {
      const auto r = measurement_model(e0, view);
      CHECK(std::abs(r.scalar("pre_I_w_q1")) < 1e-15);
      CHECK(max_abs(r.state("quanton").matrix() - r.state("pre_quanton").matrix()) < 1e-15);
    }
  }
  SUBCASE("errors") {
    const ComplexVector e0 = ket({1.0, 0.0});
    try {
      measurement_model(e0, Perspective::alice(1));
      FAIL("expected impossible outcome");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ImpossibleOutcome);
    }
    CHECK_THROWS_AS(measurement_model(e0, Perspective::alice(2)), Error);
    CHECK_THROWS_AS(measurement_model(ket({1.0, 1.0}), Perspective::bob()), Error);
  }
}

TEST_CASE("morphing scan") {
  const auto wave = morphing_scan(kInvSqrt2, kInvSqrt2, 1.0);
  CHECK(wave.scalar("I_w_q2") == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(wave.scalar("I_w_q1") == doctest::Approx(kLn2).epsilon(1e-12));

  for (double mag : {0.0, 0.3, 0.9}) {
    const Complex a = mag, b = std::polar(std::sqrt(1.0 - mag * mag), 0.4);
    CHECK(std::abs(morphing_scan(a, b, 0.0).scalar("I_w_q2")) < 1e-15);
    CHECK(morphing_scan(a, b, 1.0).scalar("I_w_q2") ==
          doctest::Approx(2.0 * std::norm(a * b)).epsilon(1e-12));
    for (double eta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const auto r = morphing_scan(a, b, eta);
      CHECK(r.scalar("I_w_q2") ==
            doctest::Approx(2.0 * std::norm(a * b) * eta * eta).epsilon(1e-12));
      check_complementarity(r, 2);
    }
  }
  CHECK_THROWS_AS(morphing_scan(kInvSqrt2, kInvSqrt2, -0.1), Error);
}
