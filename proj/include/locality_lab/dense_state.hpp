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

#include <vector>

#include "locality_lab/dense.hpp"
#include "locality_lab/product_state.hpp"

namespace locality_lab {

/// I + P as a dense matrix, or the stored matrix of a dense factor.
DenseOperator dense_of_factor(const Factor &f, unsigned n);

/// 2^-n * prod_k (I + P_k).
DenseOperator dense_of_product_state(const ProductState &s);

/// Sum of coefficient * word.
DenseOperator dense_of_pauli_sum(unsigned n,
                                 const std::vector<PauliTerm> &terms);

}  // namespace locality_lab
