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

// Acceptance suite. Prints one PASS/FAIL line per criterion with the worst
// residual and the pinned tolerance.
//
//   acceptance            run all criteria, exit 1 if any fails
//   acceptance --only N   run all, exit status reflects criterion N only

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "qduality/verify.hpp"

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    }
  }

  const auto checks = qd::run_checks();
  std::cout << qd::checks_to_text(checks);

  bool ok = true;
  bool found = only == 0;
  for (const auto& c : checks) {
    if (only != 0 && c.id != only) continue;
    found = true;
    ok = ok && c.passed;
  }
  if (!found) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return ok ? 0 : 1;
}
