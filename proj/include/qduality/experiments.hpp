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

// Circuit-stage simulations of the interferometric scenarios: the classical
// Mach-Zehnder interferometer, the quantum delayed-choice variant with a
// beam splitter in superposition, the two-qubit wave detector, a minimal
// pointer measurement and the informer-overlap (conservation law) model.
//
// Conventions: beam splitter (1/sqrt2)[[1, i], [i, 1]], phase shifter
// diag(1, e^{i phi}) on arm 1, detector k follows path k after the final
// beam splitter.

#pragma once

#include <vector>

#include "qduality/channels.hpp"
#include "qduality/linalg.hpp"
#include "qduality/report.hpp"

namespace qd {

// Tsallis orders for which every report carries I_w / I_p entries.
using Orders = std::vector<double>;
Orders default_orders();
// "q1", "q2", "q0.5", ...
std::string order_tag(double q);

ComplexMatrix beam_splitter();
ComplexMatrix phase_shifter(double phi);
// (|0> + i e^{i phi} |1>) / sqrt2, the state between the beam splitters.
PureState particle_state(double phi);
// cos(phi/2)|1> - sin(phi/2)|0>.
PureState wave_state(double phi);

enum class Bs2Mode { Present, Absent };

struct MziConfig {
  double phi = 0.0;
  Bs2Mode bs2 = Bs2Mode::Present;
};

// Phase wrapped into [0, 2 pi).
double wrap_phase(double phi);

ExperimentReport mzi_run(const MziConfig& config,
                         const Orders& orders = default_orders());

// cos(a)|p>|out> + sin(a) B|p>|in>, built with a beam splitter controlled by
// the device qubit (quanton factor first).
PureState dce_global_state(double bs2_alpha, double phi);

ExperimentReport dce_analyze(double bs2_alpha, double phi,
                             const Orders& orders = default_orders());

class WernerInput {
 public:
  static WernerInput create(double x, Complex amp_alpha, Complex amp_beta);

  double x() const { return x_; }
  Complex amp_alpha() const { return amp_alpha_; }
  Complex amp_beta() const { return amp_beta_; }
  // (1 - x) 1/2 + x |psi><psi|.
  DensityMatrix density() const;

 private:
  WernerInput(double x, Complex a, Complex b) : x_(x), amp_alpha_(a), amp_beta_(b) {}

  double x_;
  Complex amp_alpha_;
  Complex amp_beta_;
};

// Quanton (x) qubit_0 (x) qubit_1 right after the quanton leaves the beam
// splitter.
DensityMatrix wave_detector_state(const WernerInput& input);

ExperimentReport wave_detector_run(const WernerInput& input,
                                   const Orders& orders = default_orders());

struct Perspective {
  enum class Kind { Alice, Bob };
  Kind kind = Kind::Bob;
  Index outcome = 0;

  static Perspective alice(Index k) { return {Kind::Alice, k}; }
  static Perspective bob() { return {Kind::Bob, 0}; }
};

ExperimentReport measurement_model(const ComplexVector& amplitudes,
                                   Perspective perspective,
                                   const Orders& orders = default_orders());

ExperimentReport morphing_scan(Complex amp_alpha, Complex amp_beta, double eta,
                               const Orders& orders = default_orders());

}  // namespace qd
