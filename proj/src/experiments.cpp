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

#include "qduality/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qduality/error.hpp"
#include "qduality/info.hpp"
#include "qduality/nonlocality.hpp"

namespace qd {
namespace {

constexpr double kAngleSlack = 1e-9;

void add_measures(ExperimentReport& report, const std::string& prefix,
                  const DensityMatrix& rho, const ReferenceObservable& obs,
                  const Orders& orders) {
  for (double q : orders) {
    const TsallisOrder order(q);
    const std::string tag = order_tag(q);
    report.set_scalar(prefix + "I_w_" + tag, wavelike_info(rho, obs, order));
    report.set_scalar(prefix + "I_p_" + tag, particlelike_info(rho, obs, order));
  }
}

void set_amplitude(ExperimentReport& report, const std::string& name, Complex c) {
  report.set_parameter(name + "_re", c.real());
  report.set_parameter(name + "_im", c.imag());
}

ComplexMatrix projector_on(Index dim, Index k) {
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  p(k, k) = 1.0;
  return p;
}

}  // namespace

Orders default_orders() { return {1.0, 2.0}; }

std::string order_tag(double q) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "q%g", q);
  return buf;
}

ComplexMatrix beam_splitter() {
  const Complex i(0.0, 1.0);
  ComplexMatrix b(2, 2);
  b << 1.0, i, i, 1.0;
  return b / std::sqrt(2.0);
}

ComplexMatrix phase_shifter(double phi) {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(0, 0) = 1.0;
  p(1, 1) = std::polar(1.0, phi);
  return p;
}

PureState particle_state(double phi) {
  ComplexVector v(2);
  v << 1.0, Complex(0.0, 1.0) * std::polar(1.0, phi);
  return PureState::normalized(std::move(v));
}

PureState wave_state(double phi) {
  ComplexVector v(2);
  v << -std::sin(phi / 2.0), std::cos(phi / 2.0);
  return PureState::normalized(std::move(v));
}

double wrap_phase(double phi) {
  if (!std::isfinite(phi)) {
    throw Error(ErrorCode::InvalidArgument, "phase must be finite");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(phi, two_pi);
  if (w < 0.0) w += two_pi;
  return w >= two_pi ? 0.0 : w;
}

ExperimentReport mzi_run(const MziConfig& config, const Orders& orders) {
  const double phi = wrap_phase(config.phi);
  const ComplexVector input = PureState::basis(2, 0).amplitudes();
  const ComplexVector mid = phase_shifter(phi) * beam_splitter() * input;
  const ComplexVector pre =
      config.bs2 == Bs2Mode::Present ? ComplexVector(beam_splitter() * mid) : mid;

  ExperimentReport report("mzi");
  report.set_parameter("phi", phi);
  report.set_parameter("bs2_present", config.bs2 == Bs2Mode::Present ? 1.0 : 0.0);
  report.set_scalar("p_det0", std::norm(pre(0)));
  report.set_scalar("p_det1", std::norm(pre(1)));

  const auto path = ReferenceObservable::computational(2);
  const DensityMatrix mid_rho = PureState::normalized(mid).projector();
  const DensityMatrix pre_rho = PureState::normalized(pre).projector();
  add_measures(report, "mid_", mid_rho, path, orders);
  add_measures(report, "pre_", pre_rho, path, orders);
  report.set_state("mid", mid_rho);
  report.set_state("pre_detector", pre_rho);
  return report;
}

PureState dce_global_state(double bs2_alpha, double phi) {
  const PureState p = particle_state(phi);
  ComplexVector device(2);
  device << std::cos(bs2_alpha), std::sin(bs2_alpha);  // |out>, |in>
  const ComplexMatrix controlled = tensor(identity(2), projector_on(2, 0)) +
                                   tensor(beam_splitter(), projector_on(2, 1));
  const ComplexVector joint =
      controlled * tensor(ComplexMatrix(p.amplitudes()), ComplexMatrix(device));
  return PureState::normalized(joint, {2, 2});
}

ExperimentReport dce_analyze(double bs2_alpha, double phi, const Orders& orders) {
  if (!(bs2_alpha >= -kAngleSlack &&
        bs2_alpha <= std::numbers::pi / 2.0 + kAngleSlack)) {
    std::ostringstream os;
    os << "bs2_alpha must lie in [0, pi/2], got " << bs2_alpha;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  phi = wrap_phase(phi);
  const PureState global = dce_global_state(bs2_alpha, phi);
  const BipartiteSplit split{2, 2};
  const DensityMatrix quanton =
      partial_trace(global.projector(), split, Keep::First);

  ExperimentReport report("dce");
  report.set_parameter("bs2_alpha", bs2_alpha);
  report.set_parameter("phi", phi);
  add_measures(report, "", quanton, ReferenceObservable::computational(2),
               orders);
  report.set_scalar("E_q2", linear_entanglement(global, split));
  report.set_scalar("E_q1", von_neumann_entropy(quanton));
  report.set_state("quanton", quanton);
  return report;
}

WernerInput WernerInput::create(double x, Complex amp_alpha, Complex amp_beta) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << "Werner weight x must lie in [0, 1], got " << x;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  const double norm_sq = std::norm(amp_alpha) + std::norm(amp_beta);
  if (std::abs(norm_sq - 1.0) > kAmplitudeInputTol) {
    std::ostringstream os;
    os << "|alpha|^2 + |beta|^2 = " << norm_sq << " (expected 1)";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  return WernerInput(x, amp_alpha * scale, amp_beta * scale);
}

DensityMatrix WernerInput::density() const {
  ComplexVector psi(2);
  psi << amp_alpha_, amp_beta_;
  const ComplexMatrix rho =
      (1.0 - x_) * identity(2) / 2.0 + x_ * outer(psi, psi);
  return DensityMatrix::unchecked(rho);
}

DensityMatrix wave_detector_state(const WernerInput& input) {
  // Index = path * 4 + qubit0 * 2 + qubit1. Path 0 flips qubit 0, path 1
  // flips qubit 1.
  ComplexMatrix coupling = ComplexMatrix::Zero(8, 8);
  for (Index path = 0; path < 2; ++path) {
    for (Index bits = 0; bits < 4; ++bits) {
      const Index flipped = bits ^ (path == 0 ? 0b10 : 0b01);
      coupling(path * 4 + flipped, path * 4 + bits) = 1.0;
    }
  }
  const ComplexMatrix qubits = projector_on(4, 0);
  const ComplexMatrix initial = tensor(input.density().matrix(), qubits);
  const ComplexMatrix evolution = tensor(beam_splitter(), identity(4)) * coupling;
  return DensityMatrix::unchecked(
      evolution * initial * evolution.adjoint(), {2, 2, 2});
}

ExperimentReport wave_detector_run(const WernerInput& input,
                                   const Orders& orders) {
  ExperimentReport report("wave-detector");
  report.set_parameter("x", input.x());
  set_amplitude(report, "amp_alpha", input.amp_alpha());
  set_amplitude(report, "amp_beta", input.amp_beta());

  const DensityMatrix werner = input.density();
  const auto path = ReferenceObservable::computational(2);
  add_measures(report, "input_", werner, path, orders);
  const double iw2 = wavelike_info_hs(werner, path);

  const DensityMatrix evolved = wave_detector_state(input);
  const BipartiteSplit split{2, 4};
  for (Index k = 0; k < 2; ++k) {
    const Outcome click = measure_select_joint(evolved, split, path, k);
    const TwoQubitState qubits(click.state);
    const ChshResult chsh = chsh_nl(qubits);
    const std::string tag = "_click" + std::to_string(k);
    report.set_scalar("p" + tag, click.probability);
    report.set_scalar("B_max" + tag, chsh.b_max);
    report.set_scalar("N_l" + tag, chsh.n_l);
    report.set_scalar("E" + tag, concurrence(qubits));
    report.set_state("qbits" + tag, qubits.density());
    if (k == 0) report.set_scalar("Iw2_minus_2Nl", iw2 - 2.0 * chsh.n_l);
  }
  report.set_state("input", werner);
  return report;
}

ExperimentReport measurement_model(const ComplexVector& amplitudes,
                                   Perspective perspective,
                                   const Orders& orders) {
  const PureState quanton = PureState::from_amplitudes(amplitudes);
  const Index n = quanton.dim();

  // |k>|j> -> |k>|j + k mod n>, so the ready pointer |0> becomes |k>.
  ComplexMatrix shift = ComplexMatrix::Zero(n * n, n * n);
  for (Index k = 0; k < n; ++k)
    for (Index j = 0; j < n; ++j) shift(k * n + (j + k) % n, k * n + j) = 1.0;
  const ComplexVector joint =
      shift * tensor(ComplexMatrix(quanton.amplitudes()),
                     ComplexMatrix(PureState::basis(n, 0).amplitudes()));
  DensityMatrix global = PureState::normalized(joint, {n, n}).projector();

  ExperimentReport report("measurement-model");
  for (Index k = 0; k < n; ++k) {
    set_amplitude(report, "c" + std::to_string(k), amplitudes(k));
  }
  const auto basis = ReferenceObservable::computational(n);
  const DensityMatrix before = quanton.projector();
  add_measures(report, "pre_", before, basis, orders);
  std::vector<double> weights(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) weights[k] = std::norm(amplitudes(k));
  report.set_scalar("pre_H", shannon(weights));

  if (perspective.kind == Perspective::Kind::Alice) {
    const Index k = perspective.outcome;
    if (k < 0 || k >= n) {
      throw Error(ErrorCode::InvalidArgument, "pointer outcome out of range");
    }
    report.set_parameter("alice_outcome", static_cast<double>(k));
    const double p = std::norm(amplitudes(k));
    if (p < kImpossibleOutcome) {
      std::ostringstream os;
      os << "pointer reading " << k << " is impossible (|c_k|^2 = " << p << ")";
      throw Error(ErrorCode::ImpossibleOutcome, os.str());
    }
    const ComplexMatrix read = tensor(identity(n), projector_on(n, k));
    global = DensityMatrix::unchecked(read * global.matrix() * read / p, {n, n});
    report.set_scalar("p_outcome", p);
  }

  const BipartiteSplit split{n, n};
  const DensityMatrix q_state = partial_trace(global, split, Keep::First);
  const DensityMatrix pointer = partial_trace(global, split, Keep::Second);
  add_measures(report, "quanton_", q_state, basis, orders);
  add_measures(report, "pointer_", pointer, basis, orders);
  report.set_state("pre_quanton", before);
  report.set_state("quanton", q_state);
  report.set_state("pointer", pointer);
  return report;
}

ExperimentReport morphing_scan(Complex amp_alpha, Complex amp_beta, double eta,
                               const Orders& orders) {
  const InformerModel model = InformerModel::two_branch(amp_alpha, amp_beta, eta);
  const DensityMatrix quanton = reduced_from_informer(model);

  ExperimentReport report("morphing");
  set_amplitude(report, "amp_alpha", amp_alpha);
  set_amplitude(report, "amp_beta", amp_beta);
  report.set_parameter("eta", eta);
  add_measures(report, "", quanton, ReferenceObservable::computational(2),
               orders);
  report.set_state("quanton", quanton);
  return report;
}

}  // namespace qd
