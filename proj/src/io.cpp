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

#include "qduality/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qduality/error.hpp"

namespace qd {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::Parse, "field '" + field + "': " + why);
}

json parse_document(const std::string& text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) parse_error("<root>", "expected a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

Complex parse_complex(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parse_error(field, "expected a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector parse_vector(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) parse_error(field, "expected a non-empty array");
  ComplexVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Index>(i)) =
        parse_complex(j[i], field + "[" + std::to_string(i) + "]");
  }
  return v;
}

Dims parse_dims(const json& doc) {
  if (!doc.contains("dims")) return {};
  const json& j = doc["dims"];
  if (!j.is_array() || j.empty()) parse_error("dims", "expected a non-empty array");
  Dims dims;
  for (const json& d : j) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      parse_error("dims", "entries must be positive integers");
    }
    dims.push_back(static_cast<Index>(d.get<long long>()));
  }
  return dims;
}

void write_matrix(std::ostringstream& os, const ComplexMatrix& m) {
  os << '[';
  for (Index r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << '[' << format_number(m(r, c).real()) << ','
         << format_number(m(r, c).imag()) << ']';
    }
    os << ']';
  }
  os << ']';
}

void write_state(std::ostringstream& os, const DensityMatrix& rho) {
  const Dims dims = rho.dims().empty() ? Dims{rho.dim()} : rho.dims();
  os << "{\"dims\":[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ',';
    os << dims[i];
  }
  os << "],\"matrix\":";
  write_matrix(os, rho.matrix());
  os << '}';
}

void write_string(std::ostringstream& os, const std::string& s) {
  os << json(s).dump();
}

void write_scalars(std::ostringstream& os,
                   const std::vector<std::pair<std::string, double>>& items) {
  os << '{';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) os << ',';
    write_string(os, items[i].first);
    os << ':' << format_number(items[i].second);
  }
  os << '}';
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

DensityMatrix parse_state_json(const std::string& text, double tol) {
  const json doc = parse_document(text);
  Dims dims = parse_dims(doc);

  if (doc.contains("amplitudes")) {
    ComplexVector amps = parse_vector(doc["amplitudes"], "amplitudes");
    return PureState::from_amplitudes(std::move(amps), std::move(dims), tol)
        .projector();
  }
  if (!doc.contains("matrix")) {
    parse_error("matrix", "state needs either 'matrix' or 'amplitudes'");
  }
  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.empty()) {
    parse_error("matrix", "expected a non-empty array of rows");
  }
  const Index n = static_cast<Index>(rows.size());
  ComplexMatrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const std::string field = "matrix[" + std::to_string(r) + "]";
    const json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      parse_error(field, "expected " + std::to_string(n) + " entries");
    }
    m.row(r) = parse_vector(row, field).transpose();
  }
  return validate_density(m, tol, std::move(dims));
}

ReferenceObservable parse_basis_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() ||
      doc["dim"].get<long long>() < 1) {
    parse_error("dim", "expected a positive integer");
  }
  const Index dim = static_cast<Index>(doc["dim"].get<long long>());
  if (!doc.contains("basis") || doc["basis"].is_null()) {
    return ReferenceObservable::computational(dim);
  }
  const json& vectors = doc["basis"];
  if (!vectors.is_array() || static_cast<Index>(vectors.size()) != dim) {
    parse_error("basis", "expected " + std::to_string(dim) + " vectors");
  }
  std::vector<ComplexVector> vs;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    const std::string field = "basis[" + std::to_string(k) + "]";
    ComplexVector v = parse_vector(vectors[k], field);
    if (v.size() != dim) {
      parse_error(field, "expected " + std::to_string(dim) + " amplitudes");
    }
    vs.push_back(std::move(v));
  }
  return ReferenceObservable::from_vectors(vs);
}

std::string state_to_json(const DensityMatrix& rho) {
  std::ostringstream os;
  write_state(os, rho);
  return os.str();
}

std::string report_to_json(const ExperimentReport& report) {
  std::ostringstream os;
  os << "{\"experiment\":";
  write_string(os, report.experiment());
  os << ",\"parameters\":";
  write_scalars(os, report.parameters());
  os << ",\"scalars\":";
  write_scalars(os, report.scalars());
  os << ",\"states\":{";
  const auto& states = report.states();
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) os << ',';
    write_string(os, states[i].first);
    os << ':';
    write_state(os, states[i].second);
  }
  os << "}}";
  return os.str();
}

}  // namespace qd
