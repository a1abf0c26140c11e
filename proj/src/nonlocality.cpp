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

#include "qduality/nonlocality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "qduality/error.hpp"

namespace qd {
namespace {

std::array<ComplexMatrix, 3> paulis() {
  return {pauli_x(), pauli_y(), pauli_z()};
}

ComplexMatrix spin_along(const Vec3& n) {
  return n(0) * pauli_x() + n(1) * pauli_y() + n(2) * pauli_z();
}

double expectation(const ComplexMatrix& rho, const ComplexMatrix& op) {
  return (rho * op).trace().real();
}

// Unit vector along v, or fallback when v vanishes.
Vec3 direction(const Vec3& v, const Vec3& fallback) {
  const double n = v.norm();
  return n > 1e-14 ? Vec3(v / n) : fallback;
}

Vec3 random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vec3 v;
  do {
    v = Vec3(gauss(rng), gauss(rng), gauss(rng));
  } while (v.norm() < 1e-8);
  return v.normalized();
}

// v_i = Tr[rho sigma_i (x) (n.sigma)].
Vec3 left_expectations(const ComplexMatrix& rho, const Vec3& n) {
  const ComplexMatrix right = spin_along(n);
  const auto p = paulis();
  Vec3 out;
  for (int i = 0; i < 3; ++i) out(i) = expectation(rho, tensor(p[i], right));
  return out;
}

// v_j = Tr[rho (n.sigma) (x) sigma_j].
Vec3 right_expectations(const ComplexMatrix& rho, const Vec3& n) {
  const ComplexMatrix left = spin_along(n);
  const auto p = paulis();
  Vec3 out;
  for (int j = 0; j < 3; ++j) out(j) = expectation(rho, tensor(left, p[j]));
  return out;
}

}  // namespace

TwoQubitState::TwoQubitState(const DensityMatrix& rho)
    : rho_(rho.dim() == 4 ? rho.with_dims({2, 2}) : rho) {
  if (rho.dim() != 4) {
    std::ostringstream os;
    os << "two-qubit state needs dimension 4, got " << rho.dim();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

void ChshSettings::check(double tol) const {
  for (const Vec3* v : {&a, &a_prime, &b, &b_prime}) {
    if (std::abs(v->norm() - 1.0) > tol) {
      throw Error(ErrorCode::InvalidArgument,
                  "CHSH measurement directions must be unit vectors");
    }
  }
}

Mat3 correlation_matrix(const TwoQubitState& rho) {
  const auto p = paulis();
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t(i, j) = expectation(rho.matrix(), tensor(p[i], p[j]));
  return t;
}

ChshResult chsh_nl(const TwoQubitState& rho) {
  const Mat3 t = correlation_matrix(rho);
  Eigen::SelfAdjointEigenSolver<Mat3> solver(t.transpose() * t);
  // Ascending order; the two largest sit at the end.
  const Vec3 u = solver.eigenvalues();
  const double sum = std::max(u(2) + u(1), 0.0);
  return {2.0 * std::sqrt(sum), std::max(0.0, sum - 1.0)};
}

double chsh_value(const TwoQubitState& rho, const ChshSettings& settings) {
  settings.check();
  const ComplexMatrix op =
      tensor(spin_along(settings.a), spin_along(settings.b + settings.b_prime)) +
      tensor(spin_along(settings.a_prime),
             spin_along(settings.b - settings.b_prime));
  return expectation(rho.matrix(), op);
}

double chsh_bruteforce(const TwoQubitState& rho,
                       const BruteForceBudget& budget) {
  if (budget.restarts < 1) {
    throw Error(ErrorCode::InvalidArgument, "need at least one restart");
  }
  std::mt19937_64 rng(budget.seed);
  const ComplexMatrix& m = rho.matrix();
  double best = -std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < budget.restarts; ++restart) {
    ChshSettings s{random_direction(rng), random_direction(rng),
                   random_direction(rng), random_direction(rng)};
    double value = chsh_value(rho, s);
    for (int it = 0; it < budget.iterations; ++it) {
      s.a = direction(left_expectations(m, s.b + s.b_prime), s.a);
      s.a_prime = direction(left_expectations(m, s.b - s.b_prime), s.a_prime);
      s.b = direction(right_expectations(m, s.a + s.a_prime), s.b);
      s.b_prime = direction(right_expectations(m, s.a - s.a_prime), s.b_prime);
      const double next = chsh_value(rho, s);
      const bool converged = next - value < budget.convergence;
      value = std::max(value, next);
      if (converged) break;
    }
    best = std::max(best, value);
  }
  return best;
}

double concurrence(const TwoQubitState& rho) {
  // The square roots of the eigenvalues of rho (s_y s_y) rho* (s_y s_y) are
  // the singular values of W^T (s_y s_y) W for any decomposition rho = W W^+.
  // Working with W avoids taking square roots of round-off eigenvalues.
  const Spectrum spectrum = eig_hermitian(rho.matrix());
  constexpr double kDropped = 1e-14;
  Index rank = 0;
  while (rank < 4 && spectrum.values(rank) > kDropped) ++rank;
  if (rank == 0) return 0.0;

  ComplexMatrix w(4, rank);
  for (Index i = 0; i < rank; ++i) {
    w.col(i) = std::sqrt(spectrum.values(i)) * spectrum.vectors.col(i);
  }
  const ComplexMatrix flip = tensor(pauli_y(), pauli_y());
  const ComplexMatrix tau = w.transpose() * flip * w;
  Eigen::JacobiSVD<ComplexMatrix> svd(tau);
  const RealVector s = svd.singularValues();  // descending
  double c = s(0);
  for (Index i = 1; i < s.size(); ++i) c -= s(i);
  return std::clamp(c, 0.0, 1.0);
}

double linear_entanglement(const PureState& psi, BipartiteSplit split) {
  if (psi.dim() != split.total()) {
    std::ostringstream os;
    os << "pure state of dimension " << psi.dim() << " does not factor as "
       << split.dim_a << " x " << split.dim_b;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  const ComplexMatrix reduced =
      partial_trace(outer(psi.amplitudes(), psi.amplitudes()), split,
                    Keep::First);
  return std::max(1.0 - reduced.squaredNorm(), 0.0);
}

}  // namespace qd
