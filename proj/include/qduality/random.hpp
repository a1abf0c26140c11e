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

// Random ensembles for property checks. Everything is driven by an explicit
// engine so runs are reproducible.

#pragma once

#include <random>
#include <vector>

#include "qduality/channels.hpp"
#include "qduality/linalg.hpp"

namespace qd::random {

using Engine = std::mt19937_64;

ComplexMatrix ginibre(Index rows, Index cols, Engine& rng);
// Haar-distributed via QR of a Ginibre matrix with the phase fix on R.
ComplexMatrix unitary(Index dim, Engine& rng);
ComplexMatrix hermitian(Index dim, Engine& rng);
PureState pure_state(Index dim, Engine& rng);
// Rank-limited Ginibre ensemble: G G^dagger / Tr with G of shape dim x rank.
DensityMatrix density(Index dim, Index rank, Engine& rng);
// Mixed with a fraction `floor` of the maximally mixed state.
DensityMatrix full_rank_density(Index dim, Engine& rng, double floor = 1e-3);
ReferenceObservable basis(Index dim, Engine& rng);
std::vector<double> probabilities(Index n, Engine& rng);

Index uniform_index(Index lo, Index hi, Engine& rng);  // inclusive
double uniform(double lo, double hi, Engine& rng);

}  // namespace qd::random
