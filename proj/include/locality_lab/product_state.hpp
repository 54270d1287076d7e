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

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "locality_lab/dense.hpp"
#include "locality_lab/gate.hpp"
#include "locality_lab/pauli_word.hpp"

namespace locality_lab {

/// One factor (I + P) of the product notation. A Pauli factor holds the
/// signed Hermitian word P; a dense factor holds the full matrix I + P
/// after P has left the Pauli group.
using Factor = std::variant<PauliWord, DenseOperator>;

/// A density matrix written as 2^-n * prod_k (I + P_k).
///
/// Factors are identified by position. Evolution maps factor k to
/// factor k and nothing ever re-canonicalizes the generator list, so
/// "which factor changed" is a positional question. With m < n factors
/// the state is mixed; the 2^-n prefactor keeps the trace at one.
class ProductState {
 public:
  /// Throws InvalidFactorization for an anticommuting pair, a +-identity
  /// or non-Hermitian word, and RankError for a dependent set.
  static ProductState from_factors(unsigned n, std::vector<PauliWord> words);

  /// Parses `+X1 ; +X2`, optionally prefixed by the keyword `factors`.
  static ProductState parse(std::string_view text, unsigned n);

  unsigned num_qubits() const { return n_; }
  std::size_t size() const { return factors_.size(); }
  const std::vector<Factor> &factors() const { return factors_; }
  const Factor &factor(std::size_t k) const { return factors_.at(k); }
  bool all_pauli() const;
  /// Pauli words of an all-Pauli state; throws UnsupportedRepresentation
  /// if any factor is dense.
  std::vector<PauliWord> words() const;

 private:
  friend ProductState evolve(const ProductState &s, const Gate &g);
  ProductState(unsigned n, std::vector<Factor> factors)
      : n_(n), factors_(std::move(factors)) {}

  unsigned n_ = 0;
  std::vector<Factor> factors_;
};

/// Conjugates every factor by g independently. Clifford gates keep Pauli
/// factors Pauli; a generic gate turns each factor it touches into a dense
/// factor U (I + P) U^dagger. Factors acting trivially on the target of a
/// generic gate stay Pauli.
ProductState evolve(const ProductState &s, const Gate &g);

enum class ChangeKind { Unchanged, SignFlip, WordChange, LeftPauliSector };

std::string_view change_kind_name(ChangeKind kind);

struct FactorChange {
  std::size_t position;  // 0-based
  Factor before;
  Factor after;
  ChangeKind kind;
};

/// Position-wise comparison of two factor lists.
struct FactorDiff {
  std::vector<FactorChange> entries;  // one per position

  /// 0-based positions whose kind is not Unchanged.
  std::vector<std::size_t> changed() const;
  bool empty() const { return changed().empty(); }
};

/// Throws IncomparableError when qubit or factor counts differ.
FactorDiff factor_diff(const ProductState &before, const ProductState &after);

struct PauliTerm {
  double coefficient;
  PauliWord word;  // sign +1; the sign lives in the coefficient
};

inline constexpr std::size_t kMaxExpansionFactors = 20;

/// Fully expanded Pauli sum, terms in canonical_less order. Throws
/// UnsupportedRepresentation if a factor is dense.
std::vector<PauliTerm> expand_to_pauli_sum(const ProductState &s);

/// True iff the represented operators coincide. All-Pauli states are
/// compared exactly through their signed stabilizer groups; otherwise the
/// dense matrices are compared within 1e-12.
bool state_equal(const ProductState &a, const ProductState &b);

/// The product form, e.g. `1/4 (I + X1Z2)(I - Z1X2)`. Dense
/// factors print as `(I + [dense])`.
std::string render_product(const ProductState &s);

/// A single factor, e.g. `(I - Z1X2)`.
std::string render_factor(const Factor &f);

/// The tensor-sum form, e.g. `1/4 (I + X1Z2 + Z1X2 + Y1Y2)`.
std::string render_pauli_sum(unsigned n, const std::vector<PauliTerm> &terms);

/// `1/4` for n = 2.
std::string normalization_text(unsigned n);

}  // namespace locality_lab
