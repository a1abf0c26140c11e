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

// Measurement-related maps: unread measurement (dephasing), selective
// projective measurement, purification and the reduced state induced by an
// informer.

#pragma once

#include <vector>

#include "qduality/linalg.hpp"

namespace qd {

inline constexpr double kImpossibleOutcome = 1e-12;
// Amplitude pairs typed as decimals are renormalized within this slack.
inline constexpr double kAmplitudeInputTol = 1e-6;

// Orthonormal basis {|k>} of a reference observable; column k of basis() is
// |k>. Only rank-1 projector families are represented.
class ReferenceObservable {
 public:
  static ReferenceObservable computational(Index dim);
  static ReferenceObservable from_columns(const ComplexMatrix& columns,
                                          double tol = kStateTol);
  static ReferenceObservable from_vectors(const std::vector<ComplexVector>& vs,
                                          double tol = kStateTol);
  // Eigenbasis of a Hermitian operator, eigenvalues descending.
  static ReferenceObservable eigenbasis(const ComplexMatrix& observable);

  Index dim() const { return basis_.rows(); }
  const ComplexMatrix& basis() const { return basis_; }
  ComplexVector vector(Index k) const { return basis_.col(k); }
  ComplexMatrix projector(Index k) const;

 private:
  explicit ReferenceObservable(ComplexMatrix basis)
      : basis_(std::move(basis)) {}

  ComplexMatrix basis_;
};

// Amplitudes c_k over the reference basis together with the Gram matrix of
// the informer states, gram(k', k) = <I_k'|I_k>.
class InformerModel {
 public:
  static InformerModel create(ComplexVector amplitudes, ComplexMatrix gram,
                              double tol = kStateTol);
  // n = 2 with a real overlap eta between the two informer states.
  static InformerModel two_branch(Complex alpha, Complex beta, double eta);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const ComplexMatrix& gram() const { return gram_; }

 private:
  InformerModel(ComplexVector c, ComplexMatrix g)
      : amplitudes_(std::move(c)), gram_(std::move(g)) {}

  ComplexVector amplitudes_;
  ComplexMatrix gram_;
};

struct Outcome {
  DensityMatrix state;
  double probability;
};

// Sum_k Pi_k J Pi_k for any square operator J.
ComplexMatrix dephase(const ComplexMatrix& op, const ReferenceObservable& obs);
DensityMatrix dephase(const DensityMatrix& rho, const ReferenceObservable& obs);

double outcome_probability(const DensityMatrix& rho,
                           const ReferenceObservable& obs, Index k);

// Throws ImpossibleOutcome when p_k < 1e-12.
Outcome measure_select(const DensityMatrix& rho, const ReferenceObservable& obs,
                       Index k);

// Projects factor A onto |k> and returns the normalized state of factor B.
Outcome measure_select_joint(const DensityMatrix& rho, BipartiteSplit split,
                             const ReferenceObservable& obs_a, Index k);

// Spectral purification sum_i sqrt(lambda_i) |v_i>|i>_I over the eigenvalues
// above 1e-12. The result has dims {d_Q, rank}.
PureState purify(const DensityMatrix& rho);

// (rho)_{kk'} = c_k c*_k' <I_k'|I_k>.
DensityMatrix reduced_from_informer(const InformerModel& model);

}  // namespace qd
