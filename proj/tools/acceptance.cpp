// Copyright 2026 The hopfq8 Authors
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


// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exits 0 when every criterion passes and 3 otherwise.

#include <iostream>

#include "hopfq8/acceptance.hpp"
#include "hopfq8/enumerate.hpp"

int main() {
  hopfq8::AcceptanceOptions opt;
  try {
    opt.budget = hopfq8::search_budget_from_env();
  } catch (const hopfq8::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  int failed = 0;
  const int n = static_cast<int>(hopfq8::acceptance_criteria().size());
  for (int id = 1; id <= n; ++id) {
    const auto r = hopfq8::run_criterion(id, opt);
    failed += !r.pass;
    std::cout << hopfq8::format_line(r) << std::endl;
  }
  std::cout << (n - failed) << "/" << n << " criteria passed\n";
  return failed == 0 ? 0 : 3;
}
