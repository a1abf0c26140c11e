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

#include "qduality/error.hpp"

namespace qd {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch:
      return "dimension mismatch";
    case ErrorCode::InvalidState:
      return "invalid state";
    case ErrorCode::NonHermitian:
      return "non-Hermitian operator";
    case ErrorCode::ImpossibleOutcome:
      return "impossible outcome";
    case ErrorCode::SingularState:
      return "singular state";
    case ErrorCode::InvalidArgument:
      return "invalid argument";
    case ErrorCode::Parse:
      return "parse error";
  }
  return "unknown error";
}

}  // namespace qd
