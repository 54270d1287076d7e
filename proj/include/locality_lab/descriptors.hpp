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

#include <span>
#include <string>
#include <vector>

#include "locality_lab/dense.hpp"
#include "locality_lab/gate.hpp"
#include "locality_lab/pauli_word.hpp"

namespace locality_lab {

/// Heisenberg-picture descriptors: for each qubit i the pair
/// (U^dagger X_i U, U^dagger Z_i U) for the circuit U applied so far,
/// evaluated against the fixed Heisenberg state |0...0>.
class DescriptorSet {
 public:
  /// q_x[i] = X_i, q_z[i] = Z_i.
  static DescriptorSet initial(unsigned n);

  unsigned num_qubits() const { return n_; }
  const PauliWord &x_component(unsigned qubit) const { return qx_.at(qubit); }
  const PauliWord &z_component(unsigned qubit) const { return qz_.at(qubit); }

  /// U^dagger w U: every basic letter of w replaced by the matching
  /// descriptor component, multiplied in ascending-qubit, X-before-Z order.
  PauliWord substitute(const PauliWord &w) const;

  friend bool operator==(const DescriptorSet &, const DescriptorSet &) =
      default;

 private:
  friend DescriptorSet evolve_descriptors(const DescriptorSet &d,
                                          const Gate &g);
  DescriptorSet(unsigned n, std::vector<PauliWord> qx,
                std::vector<PauliWord> qz)
      : n_(n), qx_(std::move(qx)), qz_(std::move(qz)) {}

  unsigned n_ = 0;
  std::vector<PauliWord> qx_;
  std::vector<PauliWord> qz_;
};

inline DescriptorSet initial_descriptors(unsigned n) {
  return DescriptorSet::initial(n);
}

/// Appends g to the circuit. Throws UnsupportedRepresentation for generic
/// gates.
DescriptorSet evolve_descriptors(const DescriptorSet &d, const Gate &g);

/// 0-based qubits whose descriptor pair differs in word or sign.
std::vector<unsigned> descriptor_diff(const DescriptorSet &before,
                                      const DescriptorSet &after);

/// <0...0| U^dagger P U |0...0>. Throws DomainError for non-Hermitian P.
double expectation(const DescriptorSet &d, const PauliWord &observable);

/// Computational-basis distribution on `qubits` (0-based, at most 10),
/// built from the expectations of every Z-type word on the subset.
ProbabilityTable born_distribution(const DescriptorSet &d,
                                   std::span<const unsigned> qubits);

/// `q1 = (-Z1X2, X1)` for 0-based qubit 0.
std::string render_descriptor(const DescriptorSet &d, unsigned qubit);

/// Empty when each pair anticommutes internally, commutes with every other
/// pair and all components are Hermitian; otherwise the first violation.
std::string descriptor_algebra_defect(const DescriptorSet &d);

}  // namespace locality_lab
