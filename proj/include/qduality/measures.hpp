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

#include "qduality/channels.hpp"
#include "qduality/info.hpp"
#include "qduality/report.hpp"

namespace qd {

// I_w, I_p, I(Pi[rho]), S_q(rho), S_q,max and the complementarity residual
// I_w + I_p - S_q,max. States declared with dims [2, 2] also get B_max, N_l
// and the concurrence.
ExperimentReport compute_measures(const DensityMatrix& rho,
                                  const ReferenceObservable& obs,
                                  TsallisOrder q);

}  // namespace qd
