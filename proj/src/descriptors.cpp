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

#include "locality_lab/descriptors.hpp"

#include <algorithm>

#include "locality_lab/clifford.hpp"
#include "locality_lab/errors.hpp"

namespace locality_lab {

DescriptorSet DescriptorSet::initial(unsigned n) {
  std::vector<PauliWord> qx;
  std::vector<PauliWord> qz;
  qx.reserve(n);
  qz.reserve(n);
  for (unsigned q = 0; q < n; ++q) {
    qx.push_back(PauliWord::x(n, q));
    qz.push_back(PauliWord::z(n, q));
  }
  return DescriptorSet(n, std::move(qx), std::move(qz));
}

PauliWord DescriptorSet::substitute(const PauliWord &w) const {
  if (w.num_qubits() != n_) {
    throw DimensionError("word acts on " + std::to_string(w.num_qubits()) +
                         " qubits, descriptors on " + std::to_string(n_));
  }
  PauliWord out = PauliWord(n_).times_i_pow(w.phase_exp());
  for (unsigned q = 0; q < n_; ++q) {
    if ((w.x_mask() >> q) & 1u) out = pauli_mul(out, qx_[q]);
    if ((w.z_mask() >> q) & 1u) out = pauli_mul(out, qz_[q]);
  }
  return out;
}

DescriptorSet evolve_descriptors(const DescriptorSet &d, const Gate &g) {
  if (!g.is_clifford()) {
    throw UnsupportedRepresentation(
        "descriptors of a generic gate " + g.text() +
        " leave the Pauli group; only Clifford gates are supported");
  }
  const unsigned n = d.num_qubits();
  if (g.max_target() >= n) {
    throw DimensionError("gate " + g.text() + " targets a qubit beyond " +
                         std::to_string(n));
  }
  // New descriptors are U^dagger (V^dagger P V) U; only the targets move.
  std::vector<PauliWord> qx = d.qx_;
  std::vector<PauliWord> qz = d.qz_;
  for (unsigned t : g.targets()) {
    qx[t] = d.substitute(inverse_conjugate(g, PauliWord::x(n, t)));
    qz[t] = d.substitute(inverse_conjugate(g, PauliWord::z(n, t)));
  }
  return DescriptorSet(n, std::move(qx), std::move(qz));
}

std::vector<unsigned> descriptor_diff(const DescriptorSet &before,
                                      const DescriptorSet &after) {
  if (before.num_qubits() != after.num_qubits()) {
    throw DimensionError("descriptor sets have different qubit counts");
  }
  std::vector<unsigned> out;
  for (unsigned q = 0; q < before.num_qubits(); ++q) {
    if (before.x_component(q) != after.x_component(q) ||
        before.z_component(q) != after.z_component(q)) {
      out.push_back(q);
    }
  }
  return out;
}

double expectation(const DescriptorSet &d, const PauliWord &observable) {
  if (!observable.is_hermitian()) {
    throw DomainError("observable " + render(observable) +
                      " is not Hermitian");
  }
  const PauliWord w = d.substitute(observable);
  if (w.x_mask() != 0) return 0.0;
  return static_cast<double>(w.sign());
}

ProbabilityTable born_distribution(const DescriptorSet &d,
                                   std::span<const unsigned> qubits) {
  const unsigned n = d.num_qubits();
  const std::size_t k = qubits.size();
  if (k == 0 || k > kMaxBornQubits) {
    throw DimensionError("Born table needs 1 to 10 qubits");
  }
  std::uint64_t seen = 0;
  for (unsigned q : qubits) {
    if (q >= n || ((seen >> q) & 1u)) {
      throw DimensionError("Born qubits must be distinct and in range");
    }
    seen |= std::uint64_t{1} << q;
  }

  // Subset index uses the same bit convention as outcome index.
  const std::size_t size = std::size_t{1} << k;
  std::vector<double> values(size);
  for (std::size_t subset = 0; subset < size; ++subset) {
    std::uint64_t zmask = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((subset >> (k - 1 - j)) & 1u) zmask |= std::uint64_t{1} << qubits[j];
    }
    values[subset] = expectation(d, PauliWord(n, 0, zmask, 0));
  }
  // p(b) = 2^-k sum_S (-1)^{|b & S|} <Z_S>, via a Walsh-Hadamard transform.
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = values[j];
        const double b = values[j + h];
        values[j] = a + b;
        values[j + h] = a - b;
      }
    }
  }
  for (double &v : values) v /= static_cast<double>(size);
  return ProbabilityTable{{qubits.begin(), qubits.end()}, std::move(values)};
}

std::string render_descriptor(const DescriptorSet &d, unsigned qubit) {
  return "q" + std::to_string(qubit + 1) + " = (" +
         render_compact(d.x_component(qubit)) + ", " +
         render_compact(d.z_component(qubit)) + ")";
}

std::string descriptor_algebra_defect(const DescriptorSet &d) {
  const unsigned n = d.num_qubits();
  for (unsigned i = 0; i < n; ++i) {
    const PauliWord &xi = d.x_component(i);
    const PauliWord &zi = d.z_component(i);
    if (!xi.is_hermitian() || !zi.is_hermitian()) {
      return "q" + std::to_string(i + 1) + " has a non-Hermitian component";
    }
    if (commutes(xi, zi)) {
      return "q" + std::to_string(i + 1) + " components commute";
    }
    for (unsigned j = i + 1; j < n; ++j) {
      const PauliWord &xj = d.x_component(j);
      const PauliWord &zj = d.z_component(j);
      if (!commutes(xi, xj) || !commutes(xi, zj) || !commutes(zi, xj) ||
          !commutes(zi, zj)) {
        return "q" + std::to_string(i + 1) + " and q" + std::to_string(j + 1) +
               " do not commute";
      }
    }
  }
  return {};
}

}  // namespace locality_lab
