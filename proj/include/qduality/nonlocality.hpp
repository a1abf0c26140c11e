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

#pragma once

#include <array>
#include <cstdint>

#include <Eigen/Dense>

#include "qduality/linalg.hpp"

namespace qd {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Density matrix of dimension 4 read as qubit (x) qubit.
class TwoQubitState {
 public:
  explicit TwoQubitState(const DensityMatrix& rho);

  const DensityMatrix& density() const { return rho_; }
  const ComplexMatrix& matrix() const { return rho_.matrix(); }

 private:
  DensityMatrix rho_;
};

struct ChshSettings {
  Vec3 a, a_prime, b, b_prime;

  // Throws InvalidArgument unless every direction is a unit vector.
  void check(double tol = kStateTol) const;
};

struct ChshResult {
  double b_max;
  double n_l;
};

struct BruteForceBudget {
  int restarts = 32;
  int iterations = 200;
  double convergence = 1e-10;
  std::uint64_t seed = 0x5eed;
};

// T_ij = Tr[rho sigma_i (x) sigma_j], Pauli order (x, y, z).
Mat3 correlation_matrix(const TwoQubitState& rho);

// Horodecki closed form b_max = 2 sqrt(u1 + u2) over the two largest
// eigenvalues of T^T T; n_l = max(0, b_max^2 / 4 - 1).
ChshResult chsh_nl(const TwoQubitState& rho);

// Tr[rho (a.s (x) (b + b').s + a'.s (x) (b - b').s)].
double chsh_value(const TwoQubitState& rho, const ChshSettings& settings);

// Independent estimate of b_max: random restarts followed by alternating
// closed-form updates of each pair of directions.
double chsh_bruteforce(const TwoQubitState& rho,
                       const BruteForceBudget& budget = {});

// Wootters concurrence.
double concurrence(const TwoQubitState& rho);

// 1 - Tr(rho_A^2) of a pure bipartite state.
double linear_entanglement(const PureState& psi, BipartiteSplit split);

}  // namespace qd
