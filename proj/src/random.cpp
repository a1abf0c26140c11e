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

#include "qduality/random.hpp"

#include <cmath>

namespace qd::random {

ComplexMatrix ginibre(Index rows, Index cols, Engine& rng) {
  std::normal_distribution<double> gauss;
  ComplexMatrix g(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  return g;
}

ComplexMatrix unitary(Index dim, Engine& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(dim, dim, rng));
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

ComplexMatrix hermitian(Index dim, Engine& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

PureState pure_state(Index dim, Engine& rng) {
  return PureState::normalized(ginibre(dim, 1, rng).col(0));
}

DensityMatrix density(Index dim, Index rank, Engine& rng) {
  const ComplexMatrix g = ginibre(dim, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::unchecked(rho);
}

DensityMatrix full_rank_density(Index dim, Engine& rng, double floor) {
  const DensityMatrix rho = density(dim, dim, rng);
  return DensityMatrix::unchecked((1.0 - floor) * rho.matrix() +
                                  floor * identity(dim) / static_cast<double>(dim));
}

ReferenceObservable basis(Index dim, Engine& rng) {
  return ReferenceObservable::from_columns(unitary(dim, rng));
}

std::vector<double> probabilities(Index n, Engine& rng) {
  std::exponential_distribution<double> expo;
  std::vector<double> p(static_cast<std::size_t>(n));
  double total = 0.0;
  for (double& pk : p) total += (pk = expo(rng));
  for (double& pk : p) pk /= total;
  return p;
}

Index uniform_index(Index lo, Index hi, Engine& rng) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

double uniform(double lo, double hi, Engine& rng) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace qd::random
