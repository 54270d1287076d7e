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

#include <cstdint>
#include <string>
#include <string_view>

namespace locality_lab {

inline constexpr unsigned kMaxQubits = 64;

/// Single-qubit Pauli letter, as it appears in text renderings.
enum class Letter : std::uint8_t { I, X, Y, Z };

/// An n-qubit Pauli operator  i^phase * prod_j X_j^{x_j} Z_j^{z_j}.
///
/// Qubits are 0-based here; bit j of the masks is qubit j. The per-qubit
/// factor order is X before Z, so a Hermitian Y on qubit j is stored as
/// x_j = z_j = 1 with one extra power of i (Y = iXZ). Phases are exact
/// integers mod 4.
class PauliWord {
 public:
  PauliWord() = default;

  /// Identity on n qubits. Throws DimensionError unless 1 <= n <= 64.
  explicit PauliWord(unsigned n);

  /// Raw constructor; masks are truncated-checked against n.
  PauliWord(unsigned n, std::uint64_t x_mask, std::uint64_t z_mask,
            unsigned phase_exp);

  static PauliWord identity(unsigned n) { return PauliWord(n); }
  /// Hermitian single-letter word on 0-based qubit q with sign +1.
  static PauliWord single(unsigned n, unsigned qubit, Letter letter);
  static PauliWord x(unsigned n, unsigned qubit) {
    return single(n, qubit, Letter::X);
  }
  static PauliWord y(unsigned n, unsigned qubit) {
    return single(n, qubit, Letter::Y);
  }
  static PauliWord z(unsigned n, unsigned qubit) {
    return single(n, qubit, Letter::Z);
  }
  /// Hermitian word with the given masks and sign (-1 if negative).
  static PauliWord hermitian(unsigned n, std::uint64_t x_mask,
                             std::uint64_t z_mask, bool negative = false);

  unsigned num_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  unsigned phase_exp() const { return phase_; }

  Letter letter(unsigned qubit) const;
  unsigned y_count() const;
  unsigned weight() const;

  bool is_hermitian() const;
  /// +1 or -1 for Hermitian words. Throws DomainError otherwise.
  int sign() const;
  /// True when both masks are empty, whatever the phase.
  bool is_scalar() const { return x_ == 0 && z_ == 0; }
  bool is_identity() const { return is_scalar() && phase_ == 0; }
  /// True if the word acts as identity on `qubit`.
  bool acts_trivially_on(unsigned qubit) const;

  PauliWord negated() const;
  /// Same masks with sign +1.
  PauliWord unsigned_part() const;
  /// Multiplies by i^k.
  PauliWord times_i_pow(unsigned k) const;

  friend bool operator==(const PauliWord &, const PauliWord &) = default;

 private:
  unsigned n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  unsigned phase_ = 0;
};

/// Group product a*b with exact phase. Throws DimensionError on mismatch.
PauliWord pauli_mul(const PauliWord &a, const PauliWord &b);

/// Symplectic commutation test. Throws DimensionError on mismatch.
bool commutes(const PauliWord &a, const PauliWord &b);

/// Parses `[+-]? (I | ([XYZ]<index>)+)` with 1-based indices.
PauliWord parse_pauli(std::string_view text, unsigned n);

/// Canonical text: sign, then factors in ascending qubit order, e.g.
/// `-Y1Y2`, `+I`. Non-Hermitian words render with `+i`/`-i`.
std::string render(const PauliWord &w);

/// Like `render` but omits a leading `+`, e.g. `Z1X2`, `-X1`.
std::string render_compact(const PauliWord &w);

/// Total order used when listing Pauli-sum terms: by weight, then by
/// letters from qubit 1 with X < Z < Y < I, then by phase.
bool canonical_less(const PauliWord &a, const PauliWord &b);

}  // namespace locality_lab
