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

// Generated by tools/gen/make_catalog.py from data/catalog.json. Do not edit.
#ifndef DEGSTAB_CATALOG_DATA_HPP
#define DEGSTAB_CATALOG_DATA_HPP

#include <cstdint>
#include <string_view>

namespace degstab::catalog_data {

inline constexpr std::string_view kJson = R"json([
  {"id":"f2","anf":"123","n_native":3,"class_size_n7":"11811","expected":[7,875,0,17795,0]},
  {"id":"f3","anf":"123+145","n_native":5,"class_size_n7":"2314956","expected":[1,187,60,6147,0]},
  {"id":"f4","anf":"123+456","n_native":6,"class_size_n7":"45354240","expected":[0,49,49,3059,168]},
  {"id":"f5","anf":"123+245+346","n_native":6,"class_size_n7":"59527440","expected":[0,35,35,2371,256]},
  {"id":"f6","anf":"123+145+246+356+456","n_native":6,"class_size_n7":"21165312","expected":[0,21,21,1683,360]},
  {"id":"f7","anf":"127+347+567","n_native":7,"class_size_n7":"1763776","expected":[1,127,0,3747,1080],"complement_codim2_n7":315},
  {"id":"f8","anf":"123+456+147","n_native":7,"class_size_n7":"2222357760","expected":[0,13,13,1427,636],"complement_codim2_n7":147},
  {"id":"f9","anf":"123+245+346+147","n_native":7,"class_size_n7":"238109760","expected":[0,7,7,995,568],"complement_codim2_n7":91},
  {"id":"f10","anf":"123+456+147+257","n_native":7,"class_size_n7":"17778862080","expected":[0,3,3,867,678],"complement_codim2_n7":91},
  {"id":"f11","anf":"123+145+246+356+456+167","n_native":7,"class_size_n7":"444471552","expected":[0,1,1,563,500],"complement_codim2_n7":35},
  {"id":"f12","anf":"123+145+246+356+456+167+247","n_native":7,"class_size_n7":"13545799680","expected":[0,0,0,651,651],"complement_codim2_n7":91},
  {"id":"f13","anf":"123+456+178","n_native":8,"expected":[0,7,7,847,420],"complement_codim2_n8":547},
  {"id":"f14","anf":"123+456+178+478","n_native":8,"expected":[0,1,1,459,396],"complement_codim2_n8":379},
  {"id":"f15","anf":"123+245+678+147","n_native":8,"expected":[0,1,1,351,288],"complement_codim2_n8":323},
  {"id":"f16","anf":"123+245+346+378","n_native":8,"expected":[0,7,7,739,312],"complement_codim2_n8":491},
  {"id":"f17","anf":"123+145+246+356+456+178","n_native":8,"expected":[0,1,1,243,180],"complement_codim2_n8":267},
  {"id":"f18","anf":"123+145+246+356+456+167+238","n_native":8,"expected":[0,0,0,167,167],"complement_codim2_n8":211},
  {"id":"f19","anf":"123+145+246+356+456+158+237+678","n_native":8,"expected":[0,0,0,151,151],"complement_codim2_n8":211},
  {"id":"f20","anf":"123+145+246+356+456+278+347+168","n_native":8,"expected":[0,0,0,45,45],"complement_codim2_n8":127},
  {"id":"f21","anf":"145+246+356+456+278+347+168+237+147","n_native":8,"expected":[0,0,0,75,75],"complement_codim2_n8":155},
  {"id":"f22","anf":"123+234+345+456+567+678+128+238+348+458+568+178","n_native":8,"expected":[0,0,0,105,105],"complement_codim2_n8":183},
  {"id":"f23","anf":"123+145+246+356+456+167+578","n_native":8,"expected":[0,0,0,91,91],"complement_codim2_n8":155},
  {"id":"f24","anf":"123+145+246+356+456+167+568","n_native":8,"expected":[0,1,1,307,244],"complement_codim2_n8":267},
  {"id":"f25","anf":"123+145+246+356+456+167+348","n_native":8,"expected":[0,0,0,155,155],"complement_codim2_n8":155},
  {"id":"f26","anf":"123+456+147+257+268+278+348","n_native":8,"expected":[0,1,1,135,72],"complement_codim2_n8":211},
  {"id":"f27","anf":"123+456+147+257+168+178+248+358","n_native":8,"expected":[0,0,0,15,15],"complement_codim2_n8":155},
  {"id":"f28","anf":"127+347+567+258+368","n_native":8,"expected":[0,1,1,243,180],"complement_codim2_n8":267},
  {"id":"f29","anf":"123+456+147+368","n_native":8,"expected":[0,2,2,459,333],"complement_codim2_n8":379},
  {"id":"f30","anf":"123+456+147+368+578","n_native":8,"expected":[0,0,0,151,151],"complement_codim2_n8":211},
  {"id":"f31","anf":"123+456+147+368+478+568","n_native":8,"expected":[0,0,0,243,243],"complement_codim2_n8":267},
  {"id":"f32","anf":"123+456+147+168+258+348","n_native":8,"expected":[0,0,0,91,91],"complement_codim2_n8":155}
]
)json";

inline constexpr std::uint64_t kChecksum = 0x086550227d9f17ddull;

}  // namespace degstab::catalog_data

#endif  // DEGSTAB_CATALOG_DATA_HPP
