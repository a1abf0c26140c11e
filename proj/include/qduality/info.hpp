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

// Entropies (nats) and the information functionals built on them.
//
// With S_q the Tsallis entropy and Pi the unread measurement of a reference
// observable:
//   I(rho)   = S_q,max(d) - S_q(rho)
//   I_w(rho) = S_q(Pi[rho]) - S_q(rho)
//   I_p(rho) = I(Pi[rho]) + S_q(rho)
// so that I_w + I_p = S_q,max(d) for every state and every order q.

#pragma once

#include <span>

#include "qduality/channels.hpp"
#include "qduality/linalg.hpp"

namespace qd {

inline constexpr double kBoltzmannSI = 1.380649e-23;  // J/K
inline constexpr double kZeroEigenvalue = 1e-15;

class TsallisOrder {
 public:
  explicit TsallisOrder(double q);
  static TsallisOrder von_neumann() { return TsallisOrder(1.0); }

  double value() const { return q_; }
  // |q - 1| < 1e-6 is evaluated as the q -> 1 limit.
  bool is_von_neumann() const;

 private:
  double q_;
};

enum class UnitMode { Natural, SI };

class ThermalContext {
 public:
  static ThermalContext natural() { return ThermalContext(1.0, 1.0, UnitMode::Natural); }
  static ThermalContext si(double temperature_kelvin);
  static ThermalContext custom(double temperature, double boltzmann_k);

  double temperature() const { return temperature_; }
  double boltzmann_k() const { return boltzmann_k_; }
  UnitMode unit_mode() const { return mode_; }
  double kT() const { return temperature_ * boltzmann_k_; }

 private:
  ThermalContext(double t, double k, UnitMode mode);

  double temperature_;
  double boltzmann_k_;
  UnitMode mode_;
};

double shannon(std::span<const double> p);

double tsallis_from_spectrum(std::span<const double> eigenvalues,
                             TsallisOrder q);
double tsallis_entropy(const DensityMatrix& rho, TsallisOrder q);
double von_neumann_entropy(const DensityMatrix& rho);

// (1 - d^(1-q)) / (q - 1), ln d at q = 1.
double max_entropy(Index dim, TsallisOrder q);

double information(const DensityMatrix& rho, TsallisOrder q);

// For q = 2 the Hilbert-Schmidt form ||rho - Pi[rho]||^2 is evaluated.
double wavelike_info(const DensityMatrix& rho, const ReferenceObservable& obs,
                     TsallisOrder q);
double wavelike_info_hs(const DensityMatrix& rho,
                        const ReferenceObservable& obs);

// Tr[(rho - Pi[rho]) f'(rho)] with f'(t) = -(1 - q t^(q-1)) / (q - 1), and
// 1 + ln t at q = 1.
// Throws SingularState when f' diverges on a zero eigenvalue (q <= 1).
double wavelike_upper_bound(const DensityMatrix& rho,
                            const ReferenceObservable& obs, TsallisOrder q);

double particlelike_info(const DensityMatrix& rho,
                         const ReferenceObservable& obs, TsallisOrder q);

// W = k_B T I(rho) with the von Neumann information.
double work(const DensityMatrix& rho, const ThermalContext& ctx);
double demon_work_gap(const DensityMatrix& rho, const ReferenceObservable& obs,
                      const ThermalContext& ctx);

}  // namespace qd
