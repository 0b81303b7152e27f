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


// Scans square-free 1 < a < b <= bound and prints the pairs for which
// Q(sqrt a, sqrt b) embeds in a Q8-extension, with the ramification of the
// quaternion block (-a, b) of D_lambda[s=sigma].

#include <iostream>

#include "hopfq8/hopfq8.hpp"

int main(int argc, char** argv) {
  using namespace hopfq8;
  const std::int64_t bound = argc > 1 ? std::stoll(argv[1]) : 30;
  int count = 0;
  for (std::int64_t a = 2; a <= bound; ++a) {
    if (SquareClass(a).rep() != a) continue;
    for (std::int64_t b = a + 1; b <= bound; ++b) {
      if (SquareClass(b).rep() != b || (SquareClass(a) * SquareClass(b)).is_trivial()) continue;
      if (!witt_embeddable(SquareClass(a), SquareClass(b))) continue;
      ++count;
      std::cout << "(" << a << "," << b << ")  (-" << a << "," << b << ") ramified at "
                << places_string(ramification_set(-a, b)) << "\n";
    }
  }
  std::cout << count << " pairs\n";
}
