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

// Random generators and oracle helpers shared by the unit and acceptance
// suites. Test-only.

#include <algorithm>
#include <random>
#include <vector>

#include "locality_lab/dense.hpp"
#include "locality_lab/gate.hpp"
#include "locality_lab/pauli_word.hpp"
#include "locality_lab/product_state.hpp"

namespace locality_lab::testing {

using Rng = std::mt19937_64;

inline PauliWord random_word(Rng &rng, unsigned n, bool hermitian = true) {
  const std::uint64_t mask =
      n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uniform_int_distribution<std::uint64_t> bits(0, mask);
  std::uniform_int_distribution<unsigned> phase(0, 3);
  const std::uint64_t x = bits(rng);
  const std::uint64_t z = bits(rng);
  if (hermitian) return PauliWord::hermitian(n, x, z, phase(rng) & 1u);
  return PauliWord(n, x, z, phase(rng));
}

inline const std::vector<GateKind> &single_clifford_kinds() {
  static const std::vector<GateKind> kinds{GateKind::X, GateKind::Y,
                                           GateKind::Z, GateKind::H,
                                           GateKind::S, GateKind::Sdg};
  return kinds;
}

inline Gate random_single_clifford(Rng &rng, unsigned qubit) {
  const auto &kinds = single_clifford_kinds();
  std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1);
  return Gate::single(kinds[pick(rng)], qubit);
}

/// Uniform over the Clifford gate set (two-qubit gates only when n >= 2),
/// plus a generic rotation with probability `generic_rate`.
inline Gate random_gate(Rng &rng, unsigned n, double generic_rate = 0.0) {
  std::uniform_int_distribution<unsigned> qubit(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < generic_rate) {
    const double theta = unit(rng) * 6.283185307179586;
    switch (qubit(rng) % 3) {
      case 0:
        return Gate::rx(qubit(rng), theta);
      case 1:
        return Gate::ry(qubit(rng), theta);
      default:
        return Gate::rz(qubit(rng), theta);
    }
  }
  std::uniform_int_distribution<int> kind(0, n >= 2 ? 7 : 5);
  const int k = kind(rng);
  if (k < 6) return random_single_clifford(rng, qubit(rng));
  unsigned a = qubit(rng);
  unsigned b = qubit(rng);
  while (b == a) b = qubit(rng);
  return Gate::pair(k == 6 ? GateKind::CZ : GateKind::CNOT, a, b);
}

inline std::vector<Gate> random_circuit(Rng &rng, unsigned n, unsigned depth,
                                        double generic_rate = 0.0) {
  std::vector<Gate> gates;
  for (unsigned i = 0; i < depth; ++i) {
    gates.push_back(random_gate(rng, n, generic_rate));
  }
  return gates;
}

inline ProductState zero_state(unsigned n) {
  std::vector<PauliWord> zs;
  for (unsigned q = 0; q < n; ++q) zs.push_back(PauliWord::z(n, q));
  return ProductState::from_factors(n, zs);
}

/// A random stabilizer state, possibly mixed (some generators dropped) and
/// with random generator signs.
inline ProductState random_product_state(Rng &rng, unsigned n,
                                         bool allow_mixed = true) {
  ProductState s = zero_state(n);
  for (const Gate &g : random_circuit(rng, n, 3 * n + 2)) s = evolve(s, g);
  std::vector<PauliWord> words = s.words();
  std::bernoulli_distribution coin(0.5);
  std::vector<PauliWord> kept;
  for (const PauliWord &w : words) {
    if (allow_mixed && coin(rng) && coin(rng)) continue;
    kept.push_back(coin(rng) ? w.negated() : w);
  }
  std::shuffle(kept.begin(), kept.end(), rng);
  return ProductState::from_factors(n, kept);
}

/// All 4^n Hermitian words with sign +1.
inline std::vector<PauliWord> all_pauli_words(unsigned n) {
  std::vector<PauliWord> out;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < size; ++x) {
    for (std::uint64_t z = 0; z < size; ++z) {
      out.push_back(PauliWord::hermitian(n, x, z));
    }
  }
  return out;
}

/// |0...0><0...0| as a dense matrix, built directly.
inline DenseOperator dense_zero_projector(unsigned n) {
  DenseOperator z = DenseOperator::zero(n);
  Eigen::MatrixXcd m = z.matrix();
  m(0, 0) = 1;
  return {n, m};
}

}  // namespace locality_lab::testing
