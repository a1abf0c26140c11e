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

#include "qduality/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qduality/error.hpp"

namespace qd {
namespace {

Index product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), Index{1},
                         std::multiplies<>());
}

Dims checked_dims(Dims dims, Index total) {
  if (dims.empty()) return {total};
  if (product(dims) != total) {
    std::ostringstream os;
    os << "dims product " << product(dims) << " does not match dimension "
       << total;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  return dims;
}

Dims concat(const Dims& a, const Dims& b) {
  Dims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Splits a factorization at the point where the leading factors multiply to
// dim_a. Falls back to the bare split when the factorization does not align.
std::pair<Dims, Dims> split_dims(const Dims& dims, BipartiteSplit split) {
  Index acc = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (acc == split.dim_a) {
      return {Dims(dims.begin(), dims.begin() + i),
              Dims(dims.begin() + i, dims.end())};
    }
    acc *= dims[i];
  }
  if (acc == split.dim_a && split.dim_b == 1) return {dims, {1}};
  return {{split.dim_a}, {split.dim_b}};
}

bool lex_greater(const ComplexVector& a, const ComplexVector& b) {
  constexpr double eps = 1e-12;
  for (Index i = 0; i < a.size(); ++i) {
    if (std::abs(a(i).real() - b(i).real()) > eps) {
      return a(i).real() > b(i).real();
    }
    if (std::abs(a(i).imag() - b(i).imag()) > eps) {
      return a(i).imag() > b(i).imag();
    }
  }
  return false;
}

}  // namespace

PureState PureState::from_amplitudes(ComplexVector amplitudes, Dims dims,
                                     double tol) {
  if (amplitudes.size() == 0) {
    throw Error(ErrorCode::InvalidState, "pure state has no amplitudes");
  }
  const double norm_sq = amplitudes.squaredNorm();
  if (std::abs(norm_sq - 1.0) > tol) {
    std::ostringstream os;
    os << "amplitudes not normalized: sum |c_k|^2 = " << norm_sq;
    throw Error(ErrorCode::InvalidState, os.str());
  }
  Dims d = checked_dims(std::move(dims), amplitudes.size());
  return PureState(std::move(amplitudes), std::move(d));
}

PureState PureState::normalized(ComplexVector amplitudes, Dims dims) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) {
    throw Error(ErrorCode::InvalidState, "cannot normalize the zero vector");
  }
  amplitudes /= norm;
  Dims d = checked_dims(std::move(dims), amplitudes.size());
  return PureState(std::move(amplitudes), std::move(d));
}

PureState PureState::basis(Index dim, Index k) {
  if (k < 0 || k >= dim) {
    throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(k) = 1.0;
  return PureState(std::move(v), {dim});
}

DensityMatrix PureState::projector() const {
  return DensityMatrix::unchecked(outer(amplitudes_, amplitudes_), dims_);
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  return DensityMatrix(identity(dim) / static_cast<double>(dim), {dim});
}

DensityMatrix DensityMatrix::unchecked(const ComplexMatrix& m, Dims dims) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix must be square");
  }
  ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Dims d = checked_dims(std::move(dims), m.rows());
  return DensityMatrix(std::move(herm), std::move(d));
}

DensityMatrix DensityMatrix::with_dims(Dims dims) const {
  return DensityMatrix(matrix_, checked_dims(std::move(dims), dim()));
}

ComplexMatrix identity(Index dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  m << 0.0, -i, i, 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix outer(const ComplexVector& ket, const ComplexVector& bra) {
  return ket * bra.adjoint();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::unchecked(tensor(a.matrix(), b.matrix()),
                                  concat(a.dims(), b.dims()));
}

PureState tensor(const PureState& a, const PureState& b) {
  ComplexVector v = tensor(ComplexMatrix(a.amplitudes()),
                           ComplexMatrix(b.amplitudes()));
  return PureState::from_amplitudes(std::move(v), concat(a.dims(), b.dims()));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteSplit split,
                            Keep keep) {
  if (split.dim_a <= 0 || split.dim_b <= 0 || m.rows() != m.cols() ||
      m.rows() != split.total()) {
    std::ostringstream os;
    os << "partial trace: operator of dimension " << m.rows()
       << " does not factor as " << split.dim_a << " x " << split.dim_b;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  const Index da = split.dim_a;
  const Index db = split.dim_b;
  if (keep == Keep::First) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Index i = 0; i < da; ++i)
      for (Index ip = 0; ip < da; ++ip)
        for (Index j = 0; j < db; ++j) out(i, ip) += m(i * db + j, ip * db + j);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (Index j = 0; j < db; ++j)
    for (Index jp = 0; jp < db; ++jp)
      for (Index i = 0; i < da; ++i) out(j, jp) += m(i * db + j, i * db + jp);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, BipartiteSplit split,
                            Keep keep) {
  ComplexMatrix reduced = partial_trace(rho.matrix(), split, keep);
  auto [dims_a, dims_b] = split_dims(rho.dims(), split);
  return DensityMatrix::unchecked(reduced,
                                  keep == Keep::First ? dims_a : dims_b);
}

Spectrum eig_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "eigendecomposition needs a square matrix");
  }
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |M - M^dagger| = " << defect;
    throw Error(ErrorCode::NonHermitian, os.str());
  }
  const Index n = m.rows();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonHermitian, "eigensolver did not converge");
  }

  Spectrum out{RealVector(n), ComplexMatrix(n, n)};
  for (Index c = 0; c < n; ++c) {
    out.values(c) = solver.eigenvalues()(n - 1 - c);
    ComplexVector v = solver.eigenvectors().col(n - 1 - c);
    for (Index r = 0; r < n; ++r) {
      if (std::abs(v(r)) > 1e-12) {
        v *= std::conj(v(r)) / std::abs(v(r));
        v(r) = std::abs(v(r));
        break;
      }
    }
    out.vectors.col(c) = v;
  }

  // Order eigenvectors inside degenerate groups.
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  constexpr double degenerate = 1e-10;
  Index start = 0;
  while (start < n) {
    Index stop = start + 1;
    while (stop < n && out.values(start) - out.values(stop) < degenerate) {
      ++stop;
    }
    std::stable_sort(order.begin() + start, order.begin() + stop,
                     [&](Index a, Index b) {
                       return lex_greater(out.vectors.col(a),
                                          out.vectors.col(b));
                     });
    start = stop;
  }
  Spectrum sorted{RealVector(n), ComplexMatrix(n, n)};
  for (Index c = 0; c < n; ++c) {
    sorted.values(c) = out.values(order[c]);
    sorted.vectors.col(c) = out.vectors.col(order[c]);
  }
  return sorted;
}

ComplexMatrix from_spectrum(const Spectrum& spectrum, const RealVector& values) {
  return spectrum.vectors * values.cast<Complex>().asDiagonal() *
         spectrum.vectors.adjoint();
}

double hs_norm_sq(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "Hilbert-Schmidt norm needs a square matrix");
  }
  return m.squaredNorm();
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

DensityMatrix validate_density(const ComplexMatrix& m, double tol, Dims dims) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << "density matrix must be square and non-empty, got " << m.rows()
       << " x " << m.cols();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    std::ostringstream os;
    os << "density matrix is not Hermitian: max |M - M^dagger| = " << defect;
    throw Error(ErrorCode::InvalidState, os.str());
  }
  const Complex trace = m.trace();
  if (std::abs(trace - 1.0) > tol) {
    std::ostringstream os;
    os << "density matrix trace is " << trace.real() << " (expected 1)";
    throw Error(ErrorCode::InvalidState, os.str());
  }
  Spectrum spectrum = eig_hermitian(m, tol);
  const double smallest = spectrum.values(spectrum.values.size() - 1);
  if (smallest < -tol) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << smallest;
    throw Error(ErrorCode::InvalidState, os.str());
  }
  const double largest = spectrum.values(0);
  if (smallest < 0.0 || largest > 1.0) {
    RealVector clipped = spectrum.values.cwiseMax(0.0).cwiseMin(1.0);
    clipped /= clipped.sum();
    return DensityMatrix::unchecked(from_spectrum(spectrum, clipped),
                                    std::move(dims));
  }
  return DensityMatrix::unchecked(m, std::move(dims));
}

}  // namespace qd
