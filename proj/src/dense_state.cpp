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

#include "locality_lab/dense_state.hpp"

#include <cmath>

namespace locality_lab {

DenseOperator dense_of_factor(const Factor &f, unsigned n) {
  if (const auto *w = std::get_if<PauliWord>(&f)) {
    return DenseOperator::identity(n) + dense_of_word(*w);
  }
  return std::get<DenseOperator>(f);
}

DenseOperator dense_of_product_state(const ProductState &s) {
  const unsigned n = s.num_qubits();
  DenseOperator acc = DenseOperator::identity(n);
  for (const Factor &f : s.factors()) acc = acc * dense_of_factor(f, n);
  return Complex(std::ldexp(1.0, -static_cast<int>(n)), 0) * acc;
}

DenseOperator dense_of_pauli_sum(unsigned n,
                                 const std::vector<PauliTerm> &terms) {
  DenseOperator acc = DenseOperator::zero(n);
  for (const PauliTerm &t : terms) {
    acc = acc + Complex(t.coefficient, 0) * dense_of_word(t.word);
  }
  return acc;
}

}  // namespace locality_lab
