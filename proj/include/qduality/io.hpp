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

// JSON interchange for states, reference bases and reports.
//
//   state:  {"dims": [d1, d2, ...], "matrix": [[[re, im], ...], ...]}
//           {"dims": [d1, d2, ...], "amplitudes": [[re, im], ...]}
//   basis:  {"dim": d, "basis": [[[re, im], ...], ...]}  (basis optional)
//
// Numbers are written with 17 significant digits in scientific notation so
// output is byte-for-byte reproducible.

#pragma once

#include <string>

#include "qduality/channels.hpp"
#include "qduality/linalg.hpp"
#include "qduality/report.hpp"

namespace qd {

std::string format_number(double value);

std::string read_text_file(const std::string& path);

// Both throw Error(Parse, ...) naming the offending field, or the validation
// error of the decoded object.
DensityMatrix parse_state_json(const std::string& text, double tol = kStateTol);
ReferenceObservable parse_basis_json(const std::string& text);

std::string state_to_json(const DensityMatrix& rho);
std::string report_to_json(const ExperimentReport& report);

}  // namespace qd
