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

// Dense complex linear algebra for desk-scale Hilbert spaces: pure states,
// density matrices, Kronecker products, partial traces and the Hermitian
// spectral decomposition everything else is built on.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;
using Dims = std::vector<Index>;

inline constexpr double kStateTol = 1e-9;
inline constexpr double kSpectralTol = 1e-8;

// dim_a * dim_b equals the total dimension of the operator it splits.
struct BipartiteSplit {
  Index dim_a = 1;
  Index dim_b = 1;

  Index total() const { return dim_a * dim_b; }
};

enum class Keep { First, Second };

class DensityMatrix;

class PureState {
 public:
  // Rejects vectors whose squared norm deviates from one by more than tol.
  static PureState from_amplitudes(ComplexVector amplitudes, Dims dims = {},
                                   double tol = kStateTol);
  static PureState normalized(ComplexVector amplitudes, Dims dims = {});
  static PureState basis(Index dim, Index k);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  Index dim() const { return amplitudes_.size(); }
  const Dims& dims() const { return dims_; }
  Complex operator[](Index k) const { return amplitudes_(k); }

  DensityMatrix projector() const;

 private:
  PureState(ComplexVector amplitudes, Dims dims)
      : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {}

  ComplexVector amplitudes_;
  Dims dims_;
};

// Hermitian, unit-trace, positive semidefinite operator. Instances are only
// produced by validate_density() or by operations that preserve the
// invariants.
class DensityMatrix {
 public:
  static DensityMatrix maximally_mixed(Index dim);
  // Caller guarantees the invariants; only the Hermitian part is kept.
  static DensityMatrix unchecked(const ComplexMatrix& m, Dims dims = {});

  const ComplexMatrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }
  const Dims& dims() const { return dims_; }
  Complex operator()(Index r, Index c) const { return matrix_(r, c); }

  DensityMatrix with_dims(Dims dims) const;

 private:
  DensityMatrix(ComplexMatrix m, Dims dims)
      : matrix_(std::move(m)), dims_(std::move(dims)) {}

  ComplexMatrix matrix_;
  Dims dims_;
};

struct Spectrum {
  RealVector values;      // descending
  ComplexMatrix vectors;  // orthonormal columns, matching values
};

ComplexMatrix identity(Index dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix outer(const ComplexVector& ket, const ComplexVector& bra);

// Kronecker product, first operand's indices major.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
PureState tensor(const PureState& a, const PureState& b);

ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteSplit split,
                            Keep keep);
DensityMatrix partial_trace(const DensityMatrix& rho, BipartiteSplit split,
                            Keep keep);

// Eigenvalues descending. Each eigenvector has its first nonzero component
// real-positive; within degenerate groups vectors are ordered
// lexicographically descending on (re, im).
Spectrum eig_hermitian(const ComplexMatrix& m, double tol = kStateTol);

// V diag(values) V^dagger with the spectrum's eigenvectors.
ComplexMatrix from_spectrum(const Spectrum& spectrum, const RealVector& values);

double hs_norm_sq(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double hermiticity_defect(const ComplexMatrix& m);

DensityMatrix validate_density(const ComplexMatrix& m, double tol = kStateTol,
                               Dims dims = {});

}  // namespace qd
