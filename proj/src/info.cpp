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

#include "qduality/info.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qduality/error.hpp"

namespace qd {
namespace {

std::vector<double> to_vector(const RealVector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

std::vector<double> eigenvalues(const DensityMatrix& rho) {
  return to_vector(eig_hermitian(rho.matrix()).values);
}

// The spectrum of Pi[rho] is the diagonal of rho in the reference basis.
std::vector<double> dephased_spectrum(const DensityMatrix& rho,
                                      const ReferenceObservable& obs) {
  if (rho.dim() != obs.dim()) {
    std::ostringstream os;
    os << "state dimension " << rho.dim() << " does not match observable "
       << "dimension " << obs.dim();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  const ComplexMatrix& u = obs.basis();
  const ComplexVector diag = (u.adjoint() * rho.matrix() * u).diagonal();
  std::vector<double> p(static_cast<std::size_t>(diag.size()));
  for (Index k = 0; k < diag.size(); ++k) p[k] = diag(k).real();
  return p;
}

}  // namespace

TsallisOrder::TsallisOrder(double q) : q_(q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    std::ostringstream os;
    os << "Tsallis order must be a positive real, got " << q;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

bool TsallisOrder::is_von_neumann() const { return std::abs(q_ - 1.0) < 1e-6; }

ThermalContext::ThermalContext(double t, double k, UnitMode mode)
    : temperature_(t), boltzmann_k_(k), mode_(mode) {
  if (!(t > 0.0) || !(k > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "temperature and Boltzmann constant must be positive");
  }
}

ThermalContext ThermalContext::si(double temperature_kelvin) {
  return ThermalContext(temperature_kelvin, kBoltzmannSI, UnitMode::SI);
}

ThermalContext ThermalContext::custom(double temperature, double boltzmann_k) {
  return ThermalContext(temperature, boltzmann_k, UnitMode::SI);
}

double shannon(std::span<const double> p) {
  double total = 0.0;
  for (double pk : p) {
    if (pk < 0.0 || !std::isfinite(pk)) {
      throw Error(ErrorCode::InvalidArgument,
                  "probability vector has a negative or non-finite entry");
    }
    total += pk;
  }
  if (std::abs(total - 1.0) > kStateTol) {
    std::ostringstream os;
    os << "probabilities sum to " << total << " (expected 1)";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  double h = 0.0;
  for (double pk : p) {
    if (pk > 0.0) h -= pk * std::log(pk);
  }
  return std::max(h, 0.0);
}

double tsallis_from_spectrum(std::span<const double> eigenvalues,
                             TsallisOrder q) {
  if (q.is_von_neumann()) {
    double s = 0.0;
    for (double l : eigenvalues) {
      if (l > kZeroEigenvalue) s -= l * std::log(l);
    }
    return std::max(s, 0.0);
  }
  double trace_pow = 0.0;
  for (double l : eigenvalues) {
    if (l > kZeroEigenvalue) trace_pow += std::pow(l, q.value());
  }
  return std::max((1.0 - trace_pow) / (q.value() - 1.0), 0.0);
}

double tsallis_entropy(const DensityMatrix& rho, TsallisOrder q) {
  if (!q.is_von_neumann() && q.value() == 2.0) {
    // Tr rho^2 without the eigensolver.
    return std::max(1.0 - rho.matrix().squaredNorm(), 0.0);
  }
  return tsallis_from_spectrum(eigenvalues(rho), q);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return tsallis_entropy(rho, TsallisOrder::von_neumann());
}

double max_entropy(Index dim, TsallisOrder q) {
  const double d = static_cast<double>(dim);
  if (q.is_von_neumann()) return std::log(d);
  return (1.0 - std::pow(d, 1.0 - q.value())) / (q.value() - 1.0);
}

double information(const DensityMatrix& rho, TsallisOrder q) {
  return std::max(max_entropy(rho.dim(), q) - tsallis_entropy(rho, q), 0.0);
}

double wavelike_info_hs(const DensityMatrix& rho,
                        const ReferenceObservable& obs) {
  if (rho.dim() != obs.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state dimension does not match observable dimension");
  }
  return hs_norm_sq(rho.matrix() - dephase(rho.matrix(), obs));
}

double wavelike_info(const DensityMatrix& rho, const ReferenceObservable& obs,
                     TsallisOrder q) {
  if (!q.is_von_neumann() && q.value() == 2.0) {
    return wavelike_info_hs(rho, obs);
  }
  const std::vector<double> dephased = dephased_spectrum(rho, obs);
  const double gap =
      tsallis_from_spectrum(dephased, q) - tsallis_entropy(rho, q);
  return std::max(gap, 0.0);
}

double wavelike_upper_bound(const DensityMatrix& rho,
                            const ReferenceObservable& obs, TsallisOrder q) {
  if (rho.dim() != obs.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state dimension does not match observable dimension");
  }
  const Spectrum spectrum = eig_hermitian(rho.matrix());
  const Index n = spectrum.values.size();
  const double smallest = spectrum.values(n - 1);
  const bool diverges_at_zero = q.is_von_neumann() || q.value() < 1.0;
  if (diverges_at_zero && smallest <= kImpossibleOutcome) {
    std::ostringstream os;
    os << "upper bound needs a full-rank state at q = " << q.value()
       << " (smallest eigenvalue " << smallest << ")";
    throw Error(ErrorCode::SingularState, os.str());
  }
  RealVector derivative(n);
  for (Index i = 0; i < n; ++i) {
    const double t = std::max(spectrum.values(i), 0.0);
    if (q.is_von_neumann()) {
      derivative(i) = 1.0 + std::log(t);
    } else {
      derivative(i) =
          -(1.0 - q.value() * std::pow(t, q.value() - 1.0)) / (q.value() - 1.0);
    }
  }
  const ComplexMatrix coherent = rho.matrix() - dephase(rho.matrix(), obs);
  return (coherent * from_spectrum(spectrum, derivative)).trace().real();
}

double particlelike_info(const DensityMatrix& rho,
                         const ReferenceObservable& obs, TsallisOrder q) {
  const std::vector<double> dephased = dephased_spectrum(rho, obs);
  const double accessible =
      max_entropy(rho.dim(), q) - tsallis_from_spectrum(dephased, q);
  return std::max(accessible + tsallis_entropy(rho, q), 0.0);
}

double work(const DensityMatrix& rho, const ThermalContext& ctx) {
  return ctx.kT() * information(rho, TsallisOrder::von_neumann());
}

double demon_work_gap(const DensityMatrix& rho, const ReferenceObservable& obs,
                      const ThermalContext& ctx) {
  return work(rho, ctx) - work(dephase(rho, obs), ctx);
}

}  // namespace qd
