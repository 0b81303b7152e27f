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


// Decomposes the eight-dimensional fixed algebra of every structure over
// K = Q(sqrt a, sqrt b), grouped by isomorphism class.
//
//   demo_fixed_algebras [a b]     (default 11 6)

#include <iostream>
#include <string>

#include "hopfq8/hopfq8.hpp"

int main(int argc, char** argv) {
  using namespace hopfq8;
  try {
    const Rational a(argc > 2 ? argv[1] : "11"), b(argc > 2 ? argv[2] : "6");
    const BiquadraticModel K(a, b);
    std::cout << "K = Q(sqrt(" << to_string(a) << "), sqrt(" << to_string(b) << "))";
    std::cout << (witt_embeddable(SquareClass(a), SquareClass(b)) ? "" : ", not embeddable in a Q8-extension") << "\n";
    const auto fc = f_algebra_classes(q8_preset(), K);
    for (const auto& c : fc.classes) {
      std::cout << c.descriptor.to_string() << "\n";
      for (const auto& m : c.members) std::cout << "    " << m.to_string() << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
