// Copyright 2026 The locality-lab Authors
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

#pragma once

#include "locality_lab/gate.hpp"
#include "locality_lab/pauli_word.hpp"

namespace locality_lab {

/// U p U^dagger for a Clifford gate U. Throws UnsupportedRepresentation for
/// Generic1Q gates and DimensionError when a target lies outside p.
PauliWord conjugate(const Gate &g, const PauliWord &p);

/// U^dagger p U.
PauliWord inverse_conjugate(const Gate &g, const PauliWord &p);

/// CZ conjugation evaluated from the expansion
/// CZ = (I + Z_a + Z_b - Z_a Z_b) / 2 with exact Gaussian-integer
/// coefficients. Independent of the conjugation tables; used as a cross
/// check. Requires g.kind() == CZ.
PauliWord conjugate_cz_by_expansion(const Gate &g, const PauliWord &p);

}  // namespace locality_lab
