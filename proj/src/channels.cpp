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

#include "qduality/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qduality/error.hpp"

namespace qd {
namespace {

void require_dim(Index got, Index want, const char* what) {
  if (got != want) {
    std::ostringstream os;
    os << what << ": dimension " << got << " does not match observable "
       << "dimension " << want;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

void require_index(Index k, Index dim) {
  if (k < 0 || k >= dim) {
    std::ostringstream os;
    os << "outcome index " << k << " outside [0, " << dim << ")";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

}  // namespace

ReferenceObservable ReferenceObservable::computational(Index dim) {
  if (dim <= 0) {
    throw Error(ErrorCode::InvalidArgument, "observable dimension must be >= 1");
  }
  return ReferenceObservable(identity(dim));
}

ReferenceObservable ReferenceObservable::from_columns(
    const ComplexMatrix& columns, double tol) {
  if (columns.rows() != columns.cols() || columns.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "basis must contain exactly dim vectors of length dim");
  }
  const double defect =
      max_abs(columns.adjoint() * columns - identity(columns.rows()));
  if (defect > tol) {
    std::ostringstream os;
    os << "basis is not orthonormal: max |<j|k> - delta_jk| = " << defect;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  return ReferenceObservable(columns);
}

ReferenceObservable ReferenceObservable::from_vectors(
    const std::vector<ComplexVector>& vs, double tol) {
  if (vs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "basis has no vectors");
  }
  const Index dim = vs.front().size();
  ComplexMatrix columns(dim, static_cast<Index>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (vs[k].size() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "basis vectors have inconsistent lengths");
    }
    columns.col(static_cast<Index>(k)) = vs[k];
  }
  return from_columns(columns, tol);
}

ReferenceObservable ReferenceObservable::eigenbasis(
    const ComplexMatrix& observable) {
  return ReferenceObservable(eig_hermitian(observable).vectors);
}

ComplexMatrix ReferenceObservable::projector(Index k) const {
  require_index(k, dim());
  return outer(basis_.col(k), basis_.col(k));
}

InformerModel InformerModel::create(ComplexVector amplitudes,
                                    ComplexMatrix gram, double tol) {
  const Index n = amplitudes.size();
  if (n == 0) {
    throw Error(ErrorCode::InvalidArgument, "informer model has no branches");
  }
  if (std::abs(amplitudes.squaredNorm() - 1.0) > tol) {
    throw Error(ErrorCode::InvalidArgument,
                "informer amplitudes are not normalized");
  }
  if (gram.rows() != n || gram.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "Gram matrix must be n x n for n amplitudes");
  }
  if (hermiticity_defect(gram) > tol) {
    throw Error(ErrorCode::InvalidArgument, "Gram matrix is not Hermitian");
  }
  for (Index k = 0; k < n; ++k) {
    if (std::abs(gram(k, k) - 1.0) > tol) {
      throw Error(ErrorCode::InvalidArgument,
                  "Gram matrix diagonal must be 1 (normalized informer states)");
    }
  }
  const double smallest = eig_hermitian(gram, tol).values(n - 1);
  if (smallest < -tol) {
    std::ostringstream os;
    os << "Gram matrix not positive semidefinite: eigenvalue " << smallest;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  return InformerModel(std::move(amplitudes), std::move(gram));
}

InformerModel InformerModel::two_branch(Complex alpha, Complex beta,
                                        double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "overlap eta must lie in [0, 1]");
  }
  ComplexVector c(2);
  c << alpha, beta;
  if (std::abs(c.squaredNorm() - 1.0) <= kAmplitudeInputTol) c.normalize();
  ComplexMatrix g(2, 2);
  g << 1.0, eta, eta, 1.0;
  return create(std::move(c), std::move(g));
}

ComplexMatrix dephase(const ComplexMatrix& op, const ReferenceObservable& obs) {
  require_dim(op.rows(), obs.dim(), "dephase");
  const ComplexMatrix& u = obs.basis();
  const ComplexVector diag = (u.adjoint() * op * u).diagonal();
  return u * diag.asDiagonal() * u.adjoint();
}

DensityMatrix dephase(const DensityMatrix& rho, const ReferenceObservable& obs) {
  return DensityMatrix::unchecked(dephase(rho.matrix(), obs), rho.dims());
}

double outcome_probability(const DensityMatrix& rho,
                           const ReferenceObservable& obs, Index k) {
  require_dim(rho.dim(), obs.dim(), "measure");
  require_index(k, obs.dim());
  const ComplexVector v = obs.vector(k);
  return std::clamp((v.adjoint() * rho.matrix() * v)(0, 0).real(), 0.0, 1.0);
}

Outcome measure_select(const DensityMatrix& rho, const ReferenceObservable& obs,
                       Index k) {
  const double p = outcome_probability(rho, obs, k);
  if (p < kImpossibleOutcome) {
    std::ostringstream os;
    os << "outcome " << k << " is impossible (p = " << p << ")";
    throw Error(ErrorCode::ImpossibleOutcome, os.str());
  }
  const ComplexMatrix proj = obs.projector(k);
  return {DensityMatrix::unchecked(proj * rho.matrix() * proj / p, rho.dims()),
          p};
}

Outcome measure_select_joint(const DensityMatrix& rho, BipartiteSplit split,
                             const ReferenceObservable& obs_a, Index k) {
  if (rho.dim() != split.total()) {
    throw Error(ErrorCode::DimensionMismatch,
                "joint measurement: state does not factor as the split");
  }
  require_dim(split.dim_a, obs_a.dim(), "joint measurement");
  const ComplexMatrix proj = tensor(obs_a.projector(k), identity(split.dim_b));
  const ComplexMatrix projected = proj * rho.matrix() * proj;
  const double p = std::clamp(projected.trace().real(), 0.0, 1.0);
  if (p < kImpossibleOutcome) {
    std::ostringstream os;
    os << "outcome " << k << " is impossible (p = " << p << ")";
    throw Error(ErrorCode::ImpossibleOutcome, os.str());
  }
  DensityMatrix whole = DensityMatrix::unchecked(projected / p, rho.dims());
  return {partial_trace(whole, split, Keep::Second), p};
}

PureState purify(const DensityMatrix& rho) {
  const Spectrum spectrum = eig_hermitian(rho.matrix());
  const Index d = rho.dim();
  Index rank = 0;
  while (rank < d && spectrum.values(rank) > kImpossibleOutcome) ++rank;
  rank = std::max<Index>(rank, 1);

  ComplexVector psi = ComplexVector::Zero(d * rank);
  for (Index i = 0; i < rank; ++i) {
    const double weight = std::sqrt(std::max(spectrum.values(i), 0.0));
    for (Index r = 0; r < d; ++r) {
      psi(r * rank + i) += weight * spectrum.vectors(r, i);
    }
  }
  return PureState::normalized(std::move(psi), {d, rank});
}

DensityMatrix reduced_from_informer(const InformerModel& model) {
  const ComplexVector& c = model.amplitudes();
  const ComplexMatrix& g = model.gram();
  const Index n = c.size();
  ComplexMatrix rho(n, n);
  for (Index k = 0; k < n; ++k)
    for (Index kp = 0; kp < n; ++kp)
      rho(k, kp) = c(k) * std::conj(c(kp)) * g(kp, k);
  return DensityMatrix::unchecked(rho, {n});
}

}  // namespace qd
