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


// Lists the 22 Hopf-Galois structures on a Q8-extension with their
// isomorphism types, orbit counts, and Hopf-isomorphism classes.

#include <iomanip>
#include <iostream>

#include "hopfq8/hopfq8.hpp"

int main() {
  using namespace hopfq8;
  const FiniteGroup G = q8_preset();
  const auto found = enumerate_regular_normalized(G);
  std::cout << summary_line(found.subgroups) << "\n\n";

  for (const auto& N : all_named(G)) {
    const auto orbits = orbit_decomposition(N, G);
    std::cout << std::left << std::setw(24) << *N.name << std::setw(7) << short_label(*N.type) << orbits.count()
              << " orbits\n";
  }

  const auto classes = hopf_iso_classes(all_named(G), G);
  std::cout << "\n" << classes.classes.size() << " Hopf-isomorphism classes\n";
  for (const auto& c : classes.classes) {
    if (c.size() < 2) continue;
    std::cout << "  " << c[0] << " ~ " << c[1] << "\n";
  }
}
