// Copyright 2026 The degstab Authors.
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

// Builds a degree-4 function on 10 variables with no degree-drop hyperplane
// and confirms it by scanning all 1023 hyperplanes.

#include <cstdlib>
#include <iostream>

#include "degstab/degstab.hpp"

int main(int argc, char** argv) {
  using namespace degstab;
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  const Algorithm1Result res = algorithm1(10, 4, seed);
  const Anf f = res.core.to_anf();

  std::cout << format_anf(f) << "\n";
  const auto witness = check_theorem5(res.core);
  std::cout << "witnesses: " << (witness ? witness->size() : 0) << " of 10 variables\n";
  std::cout << "degree-drop hyperplanes: " << enumerate_degree_drop(f, 1).size() << "\n";
  std::cout << "fraction of such functions among all degree-4 ones on 10 variables: "
            << format_probability(1.0 - dd_probability(4, 10).value) << "\n";
  return witness ? 0 : 1;
}
