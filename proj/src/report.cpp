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

#include "qduality/report.hpp"

#include <algorithm>

#include "qduality/error.hpp"

namespace qd {
namespace {

template <typename T>
void upsert(std::vector<std::pair<std::string, T>>& items,
            const std::string& name, T value) {
  auto it = std::find_if(items.begin(), items.end(),
                         [&](const auto& kv) { return kv.first == name; });
  if (it != items.end()) {
    it->second = std::move(value);
  } else {
    items.emplace_back(name, std::move(value));
  }
}

}  // namespace

void ExperimentReport::set_parameter(const std::string& name, double value) {
  upsert(parameters_, name, value);
}

void ExperimentReport::set_scalar(const std::string& name, double value) {
  upsert(scalars_, name, value);
}

void ExperimentReport::set_state(const std::string& name, DensityMatrix state) {
  upsert(states_, name, std::move(state));
}

bool ExperimentReport::has_scalar(const std::string& name) const {
  return std::any_of(scalars_.begin(), scalars_.end(),
                     [&](const auto& kv) { return kv.first == name; });
}

double ExperimentReport::scalar(const std::string& name) const {
  for (const auto& [key, value] : scalars_) {
    if (key == name) return value;
  }
  throw Error(ErrorCode::InvalidArgument,
              "report '" + experiment_ + "' has no scalar '" + name + "'");
}

const DensityMatrix& ExperimentReport::state(const std::string& name) const {
  for (const auto& [key, value] : states_) {
    if (key == name) return value;
  }
  throw Error(ErrorCode::InvalidArgument,
              "report '" + experiment_ + "' has no state '" + name + "'");
}

}  // namespace qd
