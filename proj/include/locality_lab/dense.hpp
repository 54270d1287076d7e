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

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "locality_lab/gate.hpp"
#include "locality_lab/pauli_word.hpp"

namespace locality_lab {

inline constexpr unsigned kDenseQubitCap = 12;
inline constexpr double kDenseTolerance = 1e-12;
inline constexpr double kDensityTolerance = 1e-10;

/// Effective dense cap: 12, or LOCALITY_LAB_MAX_QUBITS when that is lower.
unsigned dense_qubit_cap();

/// Explicit 2^n x 2^n complex matrix. Qubit 0 (printed as qubit 1) is the
/// most significant bit of the basis index, so X_1 = X (x) I.
class DenseOperator {
 public:
  /// Throws CapacityError if n exceeds dense_qubit_cap() and
  /// DimensionError if `m` is not 2^n square.
  DenseOperator(unsigned n, Eigen::MatrixXcd m);

  static DenseOperator identity(unsigned n);
  static DenseOperator zero(unsigned n);

  unsigned num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXcd &matrix() const { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  Complex trace() const { return m_.trace(); }
  DenseOperator adjoint() const { return {n_, m_.adjoint()}; }

  friend DenseOperator operator*(const DenseOperator &a,
                                 const DenseOperator &b);
  friend DenseOperator operator+(const DenseOperator &a,
                                 const DenseOperator &b);
  friend DenseOperator operator*(Complex s, const DenseOperator &a);

 private:
  unsigned n_;
  Eigen::MatrixXcd m_;
};

/// Entrywise absolute comparison.
bool approx_equal(const DenseOperator &a, const DenseOperator &b,
                  double tol = kDenseTolerance);
double max_abs_diff(const DenseOperator &a, const DenseOperator &b);

/// Kronecker product of the per-qubit letters with the exact phase.
DenseOperator dense_of_word(const PauliWord &p);

/// Unitary of g embedded in an n-qubit register.
DenseOperator dense_of_gate(const Gate &g, unsigned n);

/// u a u^dagger. Throws DomainError when u is not unitary within 1e-12.
DenseOperator conjugate_dense(const DenseOperator &u, const DenseOperator &a);

bool is_unitary(const DenseOperator &u, double tol = kDenseTolerance);

/// Empty string when `rho` is Hermitian, trace one and PSD within
/// kDensityTolerance; otherwise a reason.
std::string density_defect(const DenseOperator &rho);

/// Reduces onto the 0-based qubits in `keep`, listed in ascending order.
DenseOperator partial_trace(const DenseOperator &a,
                            std::span<const unsigned> keep);

/// Computational-basis outcome distribution on a subset of qubits. Outcome
/// index bit (k-1-j) is the result on qubits[j], so qubits[0] is the
/// leading character of `label`.
struct ProbabilityTable {
  std::vector<unsigned> qubits;
  std::vector<double> p;

  std::string label(std::size_t outcome) const;
  double total() const;
};

inline constexpr unsigned kMaxBornQubits = 10;

ProbabilityTable born_probabilities(const DenseOperator &rho,
                                    std::span<const unsigned> qubits);

/// One row per line, entries `re+imj` separated by single spaces.
std::string dump(const DenseOperator &a);

}  // namespace locality_lab
