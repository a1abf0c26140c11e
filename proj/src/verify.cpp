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

#include "qduality/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "qduality/channels.hpp"
#include "qduality/experiments.hpp"
#include "qduality/info.hpp"
#include "qduality/io.hpp"
#include "qduality/nonlocality.hpp"
#include "qduality/random.hpp"

namespace qd {
namespace {

constexpr double kPi = std::numbers::pi;
const TsallisOrder kVN(1.0);
const TsallisOrder kLinear(2.0);

double binary_entropy(double x) {
  double h = 0.0;
  if (x > 0.0) h -= x * std::log(x);
  if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x);
  return h;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  }
  return out;
}

// Werner amplitudes with |alpha| = mag and fixed relative phases.
std::pair<Complex, Complex> amplitudes_for(double mag) {
  const double other = std::sqrt(std::max(0.0, 1.0 - mag * mag));
  return {std::polar(mag, 0.3), std::polar(other, -0.7)};
}

struct Worst {
  double value = 0.0;
  void update(double r) { value = std::max(value, std::abs(r)); }
};

CheckResult make(int id, std::string name, double residual, double tol,
                 std::string detail = {}) {
  return {id, std::move(name), residual < tol, residual, tol, std::move(detail)};
}

CheckResult particle_state_info(double d) {
  Worst worst;
  for (int i = 0; i <= 12; ++i) {
    const double phi = i * kPi / 6.0;
    const auto path = ReferenceObservable::computational(2);
    worst.update(wavelike_info(particle_state(phi).projector(), path, kVN) -
                 (std::log(2.0) + d));
    const ExperimentReport mzi = mzi_run({phi, Bs2Mode::Absent});
    worst.update(mzi.scalar("mid_I_w_q1") - (std::log(2.0) + d));
  }
  return make(1, "I_w(|p>) = ln 2 over phi in {0, pi/6, ..., 2pi}",
              worst.value, 1e-12);
}

CheckResult wave_state_info(double d) {
  Worst worst;
  const auto path = ReferenceObservable::computational(2);
  for (int i = 0; i < 24; ++i) {
    const double phi = 2.0 * kPi * i / 24.0;
    const double x = std::pow(std::cos(phi / 2.0), 2);
    const double expected = binary_entropy(x) + d;
    worst.update(wavelike_info(wave_state(phi).projector(), path, kVN) -
                 expected);
    const ExperimentReport mzi = mzi_run({phi, Bs2Mode::Present});
    worst.update(mzi.scalar("pre_I_w_q1") - expected);
  }
  return make(2, "I_w(|w>) = -x ln x - y ln y over a 24-point phi grid",
              worst.value, 1e-12);
}

template <typename F>
void werner_grid(F&& visit) {
  for (double x : linspace(0.0, 1.0, 10)) {
    for (double mag : linspace(0.0, 1.0, 10)) {
      const auto [a, b] = amplitudes_for(mag);
      visit(x, a, b, wave_detector_run(WernerInput::create(x, a, b)));
    }
  }
}

CheckResult wave_detector_entanglement(double d) {
  Worst worst;
  werner_grid([&](double x, Complex a, Complex b, const ExperimentReport& r) {
    const double ab = std::abs(a * b);
    for (const char* click : {"_click0", "_click1"}) {
      worst.update(r.scalar(std::string("E") + click) - (2.0 * x * ab + d));
      worst.update(r.scalar(std::string("N_l") + click) -
                   (4.0 * x * x * ab * ab + d));
    }
  });
  return make(3, "wave detector: E = 2x|ab|, N_l = 4x^2|ab|^2, both clicks",
              worst.value, 1e-10);
}

CheckResult werner_wavelike(double d) {
  Worst closed_form;
  Worst against_nl;
  double ratio = 0.0;
  werner_grid([&](double x, Complex a, Complex b, const ExperimentReport& r) {
    const double ab = std::abs(a * b);
    const double iw2 = r.scalar("input_I_w_q2");
    const double nl = r.scalar("N_l_click0");
    closed_form.update(iw2 - (2.0 * x * x * ab * ab + d));
    against_nl.update(iw2 - (2.0 * nl + d));
    if (nl > 1e-6) ratio = iw2 / nl;
  });
  std::ostringstream detail;
  detail << "I_w^(2) - 2x^2|ab|^2: " << closed_form.value
         << "; I_w^(2) - 2 N_l: " << against_nl.value
         << "; observed I_w^(2) / N_l = " << ratio;
  return make(4, "Werner input: I_w^(2) = 2x^2|ab|^2 = 2 N_l",
              std::max(closed_form.value, against_nl.value), 1e-10,
              detail.str());
}

CheckResult dce_closed_forms(double d) {
  Worst worst;
  double bound_margin = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; ++i) {
    const double alpha = (kPi / 2.0) * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      const double phi = 2.0 * kPi * j / 20.0;
      const ExperimentReport r = dce_analyze(alpha, phi);
      const double c2 = std::pow(std::cos(phi), 2);
      const double ip2 = r.scalar("I_p_q2");
      worst.update(ip2 - (0.5 * (1.0 - std::pow(std::cos(alpha), 4)) * c2 + d));
      worst.update(r.scalar("E_q2") -
                   (0.25 * std::pow(std::sin(2.0 * alpha), 2) * c2 + d));
      const bool superposed = i != 0 && i != 19;
      if (superposed && std::abs(std::cos(phi)) > 1e-12) {
        bound_margin = std::max(bound_margin, ip2 - (0.5 - d));
      }
    }
  }
  std::ostringstream detail;
  detail << "max I_p^(2) - 1/2 over superposed BS2: " << bound_margin;
  CheckResult out = make(5, "DCE: I_p^(2) and E^(2) closed forms, I_p^(2) < 1/2",
                         worst.value, 1e-10, detail.str());
  out.passed = out.passed && bound_margin < 0.0;
  return out;
}

CheckResult complementarity(double d, random::Engine& rng) {
  Worst worst;
  for (int trial = 0; trial < 1000; ++trial) {
    const Index dim = random::uniform_index(2, 8, rng);
    const Index rank = random::uniform_index(1, dim, rng);
    const DensityMatrix rho = random::density(dim, rank, rng);
    const ReferenceObservable obs = random::basis(dim, rng);
    for (const TsallisOrder& q : {kVN, kLinear}) {
      worst.update(wavelike_info(rho, obs, q) + particlelike_info(rho, obs, q) -
                   (max_entropy(dim, q) + d));
    }
  }
  return make(6, "complementarity I_w + I_p = S_q,max, q in {1, 2}",
              worst.value, 1e-10);
}

CheckResult klein_sandwich(double d, random::Engine& rng) {
  double violation = -std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 1000; ++trial) {
    const Index dim = random::uniform_index(2, 8, rng);
    const DensityMatrix rho = random::full_rank_density(dim, rng);
    const ReferenceObservable obs = random::basis(dim, rng);
    for (const TsallisOrder& q : {kVN, kLinear}) {
      const double iw = wavelike_info(rho, obs, q);
      const double ub = wavelike_upper_bound(rho, obs, q);
      violation = std::max({violation, -iw + d, iw - (ub - d)});
    }
  }
  return make(7, "Klein sandwich 0 <= I_w <= I_w^ub on full-rank states",
              violation, 1e-10, "residual is the worst bound violation");
}

CheckResult horodecki_vs_oracle(double d, random::Engine& rng) {
  Worst worst;
  for (int trial = 0; trial < 200; ++trial) {
    const Index rank = random::uniform_index(1, 4, rng);
    const TwoQubitState rho(random::density(4, rank, rng));
    BruteForceBudget budget;
    budget.seed = rng();
    worst.update(chsh_bruteforce(rho, budget) - (chsh_nl(rho).b_max + d));
  }
  return make(8, "Horodecki b_max vs brute-force CHSH (32 restarts)",
              worst.value, 1e-4);
}

CheckResult commutator_identity(double d, random::Engine& rng) {
  Worst worst;
  for (int trial = 0; trial < 500; ++trial) {
    const Index dim = random::uniform_index(2, 8, rng);
    const ComplexMatrix j = random::hermitian(dim, rng);
    const ReferenceObservable obs = random::basis(dim, rng);
    ComplexMatrix rhs = ComplexMatrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k) {
      const ComplexMatrix p = obs.projector(k);
      rhs += (j * p - p * j) * p;
    }
    const ComplexMatrix lhs = j - dephase(j, obs);
    worst.update(max_abs(lhs - rhs) + d);
  }
  return make(9, "J - Pi[J] = sum_k [J, Pi_k] Pi_k", worst.value, 1e-10);
}

CheckResult joint_entropy(double d, random::Engine& rng) {
  Worst worst;
  for (int trial = 0; trial < 500; ++trial) {
    const Index n = random::uniform_index(2, 8, rng);
    std::vector<double> p = random::probabilities(n, rng);
    if (trial % 5 == 0) {
      // Exercise the 0 ln 0 convention.
      p[0] = 0.0;
      double total = 0.0;
      for (double pk : p) total += pk;
      for (double& pk : p) pk /= total;
    }
    const ReferenceObservable obs = random::basis(n, rng);
    ComplexMatrix mix = ComplexMatrix::Zero(n, n);
    for (Index k = 0; k < n; ++k) mix += p[k] * obs.projector(k);
    const DensityMatrix rho = DensityMatrix::unchecked(mix);
    worst.update(von_neumann_entropy(rho) - (shannon(p) + d));
  }
  return make(10, "joint entropy theorem S(sum p_k Pi_k) = H(p)", worst.value,
              1e-10);
}

CheckResult branch_superposition(double d) {
  Worst worst;
  for (Index n = 2; n <= 8; ++n) {
    for (Index dim : {n, Index{8}}) {
      ComplexVector v = ComplexVector::Zero(dim);
      v.head(n).setConstant(1.0);
      const DensityMatrix rho = PureState::normalized(v).projector();
      worst.update(wavelike_info(rho, ReferenceObservable::computational(dim),
                                 kVN) -
                   (std::log(static_cast<double>(n)) + d));
    }
  }
  return make(11, "uniform n-branch superposition: I_w = ln n", worst.value,
              1e-12);
}

CheckResult measurement_perspectives(double d, random::Engine& rng) {
  Worst worst;
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = random::uniform_index(2, 5, rng);
    ComplexVector c = random::pure_state(n, rng).amplitudes();
    if (trial % 4 == 0) c(n - 1) = 0.0;
    c.normalize();
    std::vector<double> weights(static_cast<std::size_t>(n));
    for (Index k = 0; k < n; ++k) weights[k] = std::norm(c(k));

    const ExperimentReport bob = measurement_model(c, Perspective::bob());
    worst.update(bob.scalar("pre_I_w_q1") - (shannon(weights) + d));
    for (const char* key : {"quanton_I_w_q1", "pointer_I_w_q1",
                            "quanton_I_w_q2", "pointer_I_w_q2"}) {
      worst.update(bob.scalar(key) + d);
    }
    for (Index k = 0; k < n; ++k) {
      if (weights[k] < kImpossibleOutcome) continue;
      const ExperimentReport alice = measurement_model(c, Perspective::alice(k));
      for (const char* key : {"quanton_I_w_q1", "pointer_I_w_q1",
                              "quanton_I_w_q2", "pointer_I_w_q2"}) {
        worst.update(alice.scalar(key) + d);
      }
    }
  }
  return make(12, "measurement model: Alice and Bob see particlelike states",
              worst.value, 1e-12);
}

CheckResult relational_diagnosis(double d) {
  const DensityMatrix zero = PureState::basis(2, 0).projector();
  const double along_z = wavelike_info(
      zero, ReferenceObservable::eigenbasis(pauli_z()), kVN);
  const double along_x = wavelike_info(
      zero, ReferenceObservable::eigenbasis(pauli_x()), kVN);
  Worst worst;
  worst.update(along_z - d);
  worst.update(along_x - (std::log(2.0) + d));
  return make(13, "|0>: I_w = 0 under sigma_z, ln 2 under sigma_x",
              worst.value, 1e-12);
}

CheckResult morphing_limit(double d) {
  Worst worst;
  for (double mag : linspace(0.0, 1.0, 11)) {
    for (double eta : linspace(0.0, 1.0, 11)) {
      const auto [a, b] = amplitudes_for(mag);
      const double ab = std::abs(a * b);
      const ExperimentReport r = morphing_scan(a, b, eta);
      worst.update(r.scalar("I_w_q2") - (2.0 * ab * ab * eta * eta + d));
    }
  }
  const double h = 1.0 / std::sqrt(2.0);
  worst.update(morphing_scan(h, h, 1.0).scalar("I_w_q2") - (0.5 + d));
  return make(14, "morphing: I_w^(2) = 2|ab|^2 eta^2, strictly wavelike at 1/2",
              worst.value, 1e-10);
}

}  // namespace

std::vector<CheckResult> run_checks(const VerifyOptions& options) {
  const double d = options.perturbation;
  random::Engine rng(options.seed);
  std::vector<CheckResult> out;
  out.push_back(particle_state_info(d));
  out.push_back(wave_state_info(d));
  out.push_back(wave_detector_entanglement(d));
  out.push_back(werner_wavelike(d));
  out.push_back(dce_closed_forms(d));
  out.push_back(complementarity(d, rng));
  out.push_back(klein_sandwich(d, rng));
  out.push_back(horodecki_vs_oracle(d, rng));
  out.push_back(commutator_identity(d, rng));
  out.push_back(joint_entropy(d, rng));
  out.push_back(branch_superposition(d));
  out.push_back(measurement_perspectives(d, rng));
  out.push_back(relational_diagnosis(d));
  out.push_back(morphing_limit(d));
  return out;
}

std::string checks_to_text(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  int failed = 0;
  for (const CheckResult& c : checks) {
    if (!c.passed) ++failed;
    char id[8];
    std::snprintf(id, sizeof id, "%02d", c.id);
    os << (c.passed ? "[PASS] " : "[FAIL] ") << id << ' ' << c.name
       << "  residual=" << format_number(c.residual)
       << " tol=" << format_number(c.tolerance);
    if (!c.detail.empty()) os << "  (" << c.detail << ')';
    os << '\n';
  }
  os << (checks.size() - failed) << '/' << checks.size() << " checks passed\n";
  return os.str();
}

std::string checks_to_json(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  bool all = true;
  os << "{\"checks\":[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const CheckResult& c = checks[i];
    all = all && c.passed;
    if (i) os << ',';
    os << "{\"id\":" << c.id << ",\"name\":\"" << c.name << "\",\"passed\":"
       << (c.passed ? "true" : "false")
       << ",\"residual\":" << format_number(c.residual)
       << ",\"tolerance\":" << format_number(c.tolerance) << '}';
  }
  os << "],\"all_passed\":" << (all ? "true" : "false") << '}';
  return os.str();
}

}  // namespace qd
