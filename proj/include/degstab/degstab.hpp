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

#ifndef DEGSTAB_DEGSTAB_HPP
#define DEGSTAB_DEGSTAB_HPP

#include "degstab/anf.hpp"
#include "degstab/bits.hpp"
#include "degstab/catalog.hpp"
#include "degstab/construct.hpp"
#include "degstab/counting.hpp"
#include "degstab/degdrop.hpp"
#include "degstab/error.hpp"
#include "degstab/f2_matrix.hpp"
#include "degstab/invariants.hpp"
#include "degstab/special.hpp"
#include "degstab/subspace.hpp"

#endif  // DEGSTAB_DEGSTAB_HPP
