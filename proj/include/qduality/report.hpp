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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qduality/linalg.hpp"

namespace qd {

// Named scalars and states in insertion order; the order is what serializers
// and sweep tables use.
class ExperimentReport {
 public:
  explicit ExperimentReport(std::string experiment = {})
      : experiment_(std::move(experiment)) {}

  const std::string& experiment() const { return experiment_; }

  void set_parameter(const std::string& name, double value);
  void set_scalar(const std::string& name, double value);
  void set_state(const std::string& name, DensityMatrix state);

  bool has_scalar(const std::string& name) const;
  // Throws InvalidArgument for unknown names.
  double scalar(const std::string& name) const;
  const DensityMatrix& state(const std::string& name) const;

  const std::vector<std::pair<std::string, double>>& parameters() const {
    return parameters_;
  }
  const std::vector<std::pair<std::string, double>>& scalars() const {
    return scalars_;
  }
  const std::vector<std::pair<std::string, DensityMatrix>>& states() const {
    return states_;
  }

 private:
  std::string experiment_;
  std::vector<std::pair<std::string, double>> parameters_;
  std::vector<std::pair<std::string, double>> scalars_;
  std::vector<std::pair<std::string, DensityMatrix>> states_;
};

}  // namespace qd
