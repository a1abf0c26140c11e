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

// End-to-end checks of every closed-form result the library reproduces. Used
// by the `verify` command and the acceptance test binary.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qd {

struct CheckResult {
  int id;
  std::string name;
  bool passed;
  double residual;   // worst observed deviation
  double tolerance;  // pass threshold on the residual
  std::string detail;
};

struct VerifyOptions {
  // Added to every expected value; a nonzero value must make checks fail.
  double perturbation = 0.0;
  std::uint64_t seed = 20130611;
};

std::vector<CheckResult> run_checks(const VerifyOptions& options = {});

// One "[PASS]/[FAIL] id name residual tolerance" line per check plus a
// summary line.
std::string checks_to_text(const std::vector<CheckResult>& checks);
std::string checks_to_json(const std::vector<CheckResult>& checks);

}  // namespace qd
