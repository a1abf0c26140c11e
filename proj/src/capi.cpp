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

#include "qduality/qduality.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "qduality/channels.hpp"
#include "qduality/error.hpp"
#include "qduality/experiments.hpp"
#include "qduality/info.hpp"
#include "qduality/io.hpp"
#include "qduality/measures.hpp"
#include "qduality/nonlocality.hpp"
#include "qduality/verify.hpp"

struct qd_state {
  qd::DensityMatrix rho;
};

struct qd_basis {
  qd::ReferenceObservable obs;
};

struct qd_report {
  qd::ExperimentReport report;
};

namespace {

thread_local std::string last_error;

qd_status to_status(qd::ErrorCode code) {
  switch (code) {
    case qd::ErrorCode::DimensionMismatch:
      return QD_ERR_DIMENSION;
    case qd::ErrorCode::InvalidState:
      return QD_ERR_INVALID_STATE;
    case qd::ErrorCode::NonHermitian:
      return QD_ERR_NON_HERMITIAN;
    case qd::ErrorCode::ImpossibleOutcome:
      return QD_ERR_IMPOSSIBLE_OUTCOME;
    case qd::ErrorCode::SingularState:
      return QD_ERR_SINGULAR_STATE;
    case qd::ErrorCode::InvalidArgument:
      return QD_ERR_INVALID_ARGUMENT;
    case qd::ErrorCode::Parse:
      return QD_ERR_PARSE;
  }
  return QD_ERR_INTERNAL;
}

qd_status fail(qd_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
qd_status guarded(F&& body) {
  try {
    body();
    return QD_OK;
  } catch (const qd::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QD_ERR_INTERNAL, "unknown exception");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw qd::Error(qd::ErrorCode::InvalidArgument,
                    std::string(what) + " must not be NULL");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qd::Dims to_dims(const size_t* dims, size_t ndims) {
  qd::Dims out;
  for (size_t i = 0; dims != nullptr && i < ndims; ++i) {
    out.push_back(static_cast<qd::Index>(dims[i]));
  }
  return out;
}

qd::ComplexVector to_vector(const double* interleaved, size_t n) {
  qd::ComplexVector v(static_cast<qd::Index>(n));
  for (size_t i = 0; i < n; ++i) {
    v(static_cast<qd::Index>(i)) = {interleaved[2 * i], interleaved[2 * i + 1]};
  }
  return v;
}

qd::ReferenceObservable basis_for(const qd_basis* basis, qd::Index dim) {
  return basis != nullptr ? basis->obs
                          : qd::ReferenceObservable::computational(dim);
}

qd::Orders to_orders(const double* orders, size_t n) {
  if (orders == nullptr || n == 0) return qd::default_orders();
  return qd::Orders(orders, orders + n);
}

void emit(qd_report** out, qd::ExperimentReport report) {
  *out = new qd_report{std::move(report)};
}

}  // namespace

extern "C" {

const char* qd_version(void) { return "1.0.0"; }

const char* qd_last_error(void) { return last_error.c_str(); }

const char* qd_status_name(qd_status status) {
  switch (status) {
    case QD_OK:
      return "ok";
    case QD_ERR_DIMENSION:
      return "dimension mismatch";
    case QD_ERR_INVALID_STATE:
      return "invalid state";
    case QD_ERR_NON_HERMITIAN:
      return "non-Hermitian operator";
    case QD_ERR_IMPOSSIBLE_OUTCOME:
      return "impossible outcome";
    case QD_ERR_SINGULAR_STATE:
      return "singular state";
    case QD_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case QD_ERR_PARSE:
      return "parse error";
    case QD_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void qd_string_free(char* s) { std::free(s); }

qd_status qd_state_from_matrix(size_t dim, const double* entries,
                               const size_t* dims, size_t ndims, double tol,
                               qd_state** out) {
  return guarded([&] {
    require(entries, "entries");
    require(out, "out");
    const auto n = static_cast<qd::Index>(dim);
    qd::ComplexMatrix m(n, n);
    for (qd::Index r = 0; r < n; ++r)
      for (qd::Index c = 0; c < n; ++c) {
        const size_t off = 2 * static_cast<size_t>(r * n + c);
        m(r, c) = {entries[off], entries[off + 1]};
      }
    *out = new qd_state{qd::validate_density(m, tol > 0.0 ? tol : qd::kStateTol,
                                             to_dims(dims, ndims))};
  });
}

qd_status qd_state_from_amplitudes(size_t dim, const double* amplitudes,
                                   const size_t* dims, size_t ndims,
                                   qd_state** out) {
  return guarded([&] {
    require(amplitudes, "amplitudes");
    require(out, "out");
    *out = new qd_state{qd::PureState::from_amplitudes(
                            to_vector(amplitudes, dim), to_dims(dims, ndims))
                            .projector()};
  });
}

qd_status qd_state_from_json(const char* text, qd_state** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new qd_state{qd::parse_state_json(text)};
  });
}

qd_status qd_state_load(const char* path, qd_state** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new qd_state{qd::parse_state_json(qd::read_text_file(path))};
  });
}

void qd_state_free(qd_state* state) { delete state; }

size_t qd_state_dim(const qd_state* state) {
  return state != nullptr ? static_cast<size_t>(state->rho.dim()) : 0;
}

qd_status qd_state_entries(const qd_state* state, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    const qd::ComplexMatrix& m = state->rho.matrix();
    const qd::Index n = m.rows();
    for (qd::Index r = 0; r < n; ++r)
      for (qd::Index c = 0; c < n; ++c) {
        const size_t off = 2 * static_cast<size_t>(r * n + c);
        out[off] = m(r, c).real();
        out[off + 1] = m(r, c).imag();
      }
  });
}

qd_status qd_state_to_json(const qd_state* state, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = duplicate(qd::state_to_json(state->rho));
  });
}

qd_status qd_basis_computational(size_t dim, qd_basis** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qd_basis{
        qd::ReferenceObservable::computational(static_cast<qd::Index>(dim))};
  });
}

qd_status qd_basis_from_vectors(size_t dim, const double* vectors,
                                qd_basis** out) {
  return guarded([&] {
    require(vectors, "vectors");
    require(out, "out");
    std::vector<qd::ComplexVector> vs;
    for (size_t k = 0; k < dim; ++k) {
      vs.push_back(to_vector(vectors + 2 * dim * k, dim));
    }
    *out = new qd_basis{qd::ReferenceObservable::from_vectors(vs)};
  });
}

qd_status qd_basis_from_json(const char* text, qd_basis** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new qd_basis{qd::parse_basis_json(text)};
  });
}

qd_status qd_basis_load(const char* path, qd_basis** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new qd_basis{qd::parse_basis_json(qd::read_text_file(path))};
  });
}

void qd_basis_free(qd_basis* basis) { delete basis; }

qd_status qd_dephase(const qd_state* state, const qd_basis* basis,
                     qd_state** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = new qd_state{
        qd::dephase(state->rho, basis_for(basis, state->rho.dim()))};
  });
}

qd_status qd_tsallis_entropy(const qd_state* state, double q, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = qd::tsallis_entropy(state->rho, qd::TsallisOrder(q));
  });
}

qd_status qd_max_entropy(size_t dim, double q, double* out) {
  return guarded([&] {
    require(out, "out");
    if (dim == 0) {
      throw qd::Error(qd::ErrorCode::InvalidArgument, "dimension must be >= 1");
    }
    *out = qd::max_entropy(static_cast<qd::Index>(dim), qd::TsallisOrder(q));
  });
}

qd_status qd_wavelike_info(const qd_state* state, const qd_basis* basis,
                           double q, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = qd::wavelike_info(state->rho, basis_for(basis, state->rho.dim()),
                             qd::TsallisOrder(q));
  });
}

qd_status qd_wavelike_upper_bound(const qd_state* state, const qd_basis* basis,
                                  double q, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = qd::wavelike_upper_bound(
        state->rho, basis_for(basis, state->rho.dim()), qd::TsallisOrder(q));
  });
}

qd_status qd_particlelike_info(const qd_state* state, const qd_basis* basis,
                               double q, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = qd::particlelike_info(
        state->rho, basis_for(basis, state->rho.dim()), qd::TsallisOrder(q));
  });
}

qd_status qd_work(const qd_state* state, double temperature,
                  double boltzmann_k, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = qd::work(state->rho,
                    qd::ThermalContext::custom(temperature, boltzmann_k));
  });
}

qd_status qd_demon_work_gap(const qd_state* state, const qd_basis* basis,
                            double temperature, double boltzmann_k,
                            double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = qd::demon_work_gap(
        state->rho, basis_for(basis, state->rho.dim()),
        qd::ThermalContext::custom(temperature, boltzmann_k));
  });
}

qd_status qd_chsh(const qd_state* state, double* b_max, double* n_l) {
  return guarded([&] {
    require(state, "state");
    const qd::ChshResult r = qd::chsh_nl(qd::TwoQubitState(state->rho));
    if (b_max != nullptr) *b_max = r.b_max;
    if (n_l != nullptr) *n_l = r.n_l;
  });
}

qd_status qd_chsh_bruteforce(const qd_state* state, int restarts,
                             int iterations, uint64_t seed, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    qd::BruteForceBudget budget;
    budget.restarts = restarts;
    budget.iterations = iterations;
    budget.seed = seed;
    *out = qd::chsh_bruteforce(qd::TwoQubitState(state->rho), budget);
  });
}

qd_status qd_concurrence(const qd_state* state, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = qd::concurrence(qd::TwoQubitState(state->rho));
  });
}

qd_status qd_measures(const qd_state* state, const qd_basis* basis, double q,
                      qd_report** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    emit(out, qd::compute_measures(state->rho,
                                   basis_for(basis, state->rho.dim()),
                                   qd::TsallisOrder(q)));
  });
}

qd_status qd_experiment_mzi(double phi, int bs2_present, const double* orders,
                            size_t n_orders, qd_report** out) {
  return guarded([&] {
    require(out, "out");
    qd::MziConfig config{phi, bs2_present ? qd::Bs2Mode::Present
                                          : qd::Bs2Mode::Absent};
    emit(out, qd::mzi_run(config, to_orders(orders, n_orders)));
  });
}

qd_status qd_experiment_dce(double bs2_alpha, double phi, const double* orders,
                            size_t n_orders, qd_report** out) {
  return guarded([&] {
    require(out, "out");
    emit(out, qd::dce_analyze(bs2_alpha, phi, to_orders(orders, n_orders)));
  });
}

qd_status qd_experiment_wave_detector(double x, double alpha_re,
                                      double alpha_im, double beta_re,
                                      double beta_im, const double* orders,
                                      size_t n_orders, qd_report** out) {
  return guarded([&] {
    require(out, "out");
    const auto input = qd::WernerInput::create(
        x, {alpha_re, alpha_im}, {beta_re, beta_im});
    emit(out, qd::wave_detector_run(input, to_orders(orders, n_orders)));
  });
}

qd_status qd_experiment_measurement_model(const double* amplitudes, size_t n,
                                          long alice_outcome,
                                          const double* orders,
                                          size_t n_orders, qd_report** out) {
  return guarded([&] {
    require(amplitudes, "amplitudes");
    require(out, "out");
    const qd::Perspective who =
        alice_outcome < 0 ? qd::Perspective::bob()
                          : qd::Perspective::alice(alice_outcome);
    emit(out, qd::measurement_model(to_vector(amplitudes, n), who,
                                    to_orders(orders, n_orders)));
  });
}

qd_status qd_experiment_morphing(double alpha_re, double alpha_im,
                                 double beta_re, double beta_im, double eta,
                                 const double* orders, size_t n_orders,
                                 qd_report** out) {
  return guarded([&] {
    require(out, "out");
    emit(out, qd::morphing_scan({alpha_re, alpha_im}, {beta_re, beta_im}, eta,
                                to_orders(orders, n_orders)));
  });
}

void qd_report_free(qd_report* report) { delete report; }

size_t qd_report_scalar_count(const qd_report* report) {
  return report != nullptr ? report->report.scalars().size() : 0;
}

const char* qd_report_scalar_name(const qd_report* report, size_t i) {
  if (report == nullptr || i >= report->report.scalars().size()) return nullptr;
  return report->report.scalars()[i].first.c_str();
}

double qd_report_scalar_value(const qd_report* report, size_t i) {
  if (report == nullptr || i >= report->report.scalars().size()) return 0.0;
  return report->report.scalars()[i].second;
}

qd_status qd_report_scalar(const qd_report* report, const char* name,
                           double* out) {
  return guarded([&] {
    require(report, "report");
    require(name, "name");
    require(out, "out");
    *out = report->report.scalar(name);
  });
}

qd_status qd_report_to_json(const qd_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = duplicate(qd::report_to_json(report->report));
  });
}

qd_status qd_verify(double perturbation, int as_json, char** text_out,
                    int* all_passed) {
  return guarded([&] {
    qd::VerifyOptions options;
    options.perturbation = perturbation;
    const auto checks = qd::run_checks(options);
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.passed;
    if (all_passed != nullptr) *all_passed = ok ? 1 : 0;
    if (text_out != nullptr) {
      *text_out = duplicate(as_json ? qd::checks_to_json(checks)
                                    : qd::checks_to_text(checks));
    }
  });
}

}  // extern "C"
