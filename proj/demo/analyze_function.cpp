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

// Profile of a cubic on 8 variables and what the invariants say about it.

#include <iostream>

#include "degstab/degstab.hpp"

int main(int argc, char** argv) {
  using namespace degstab;
  const char* text = argc > 1 ? argv[1] : "123+145+246+356+456+167+247";
  const Anf f = parse_anf(text, 8);

  const DegreeDropProfile p = profile(f, 3);
  std::cout << "f = " << format_anf(f) << "\n";
  for (const auto& e : p.entries) {
    std::cout << "co-dim " << e.codim << ": " << e.count << " degree-drop spaces, " << e.new_count << " new\n";
  }
  std::cout << "deg_stab = " << deg_stab(f) << "\n";
  std::cout << "R_1 = " << r_k(f, 1) << ", R_2 = " << r_k(f, 2) << "\n";

  const auto dd = enumerate_degree_drop(f, 1);
  for (const auto& v : dd) std::cout << "  drops on " << format_subspace(v) << "\n";
  return 0;
}
