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

#include "qduality/measures.hpp"

#include "qduality/nonlocality.hpp"

namespace qd {

ExperimentReport compute_measures(const DensityMatrix& rho,
                                  const ReferenceObservable& obs,
                                  TsallisOrder q) {
  ExperimentReport report("measures");
  report.set_parameter("q", q.value());
  report.set_parameter("dim", static_cast<double>(rho.dim()));

  const double iw = wavelike_info(rho, obs, q);
  const double ip = particlelike_info(rho, obs, q);
  const double smax = max_entropy(rho.dim(), q);
  report.set_scalar("I_w", iw);
  report.set_scalar("I_p", ip);
  report.set_scalar("I_dephased", information(dephase(rho, obs), q));
  report.set_scalar("S_q", tsallis_entropy(rho, q));
  report.set_scalar("S_max", smax);
  report.set_scalar("complementarity_residual", iw + ip - smax);

  if (rho.dims() == Dims{2, 2}) {
    const TwoQubitState two(rho);
    const ChshResult chsh = chsh_nl(two);
    report.set_scalar("B_max", chsh.b_max);
    report.set_scalar("N_l", chsh.n_l);
    report.set_scalar("concurrence", concurrence(two));
  }
  return report;
}

}  // namespace qd
