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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace locality_lab {

using Complex = std::complex<double>;
/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<Complex, 4>;

enum class GateKind { X, Y, Z, H, S, Sdg, CZ, CNOT, Generic1Q };

/// A gate with 0-based targets. Clifford kinds carry no matrix; a
/// Generic1Q gate carries a unitary 2x2 matrix and the text it was built
/// from. For CNOT the first target is the control.
class Gate {
 public:
  static Gate single(GateKind kind, unsigned target);
  static Gate pair(GateKind kind, unsigned first, unsigned second);
  /// Throws DomainError if `m` is not unitary within 1e-12.
  static Gate generic(unsigned target, const Matrix2 &m, std::string text);
  static Gate rx(unsigned target, double theta);
  static Gate ry(unsigned target, double theta);
  static Gate rz(unsigned target, double theta);

  GateKind kind() const { return kind_; }
  std::span<const unsigned> targets() const {
    return {targets_.data(), arity_};
  }
  unsigned arity() const { return arity_; }
  bool is_clifford() const { return kind_ != GateKind::Generic1Q; }
  /// Only meaningful for Generic1Q.
  const Matrix2 &matrix() const { return matrix_; }
  unsigned max_target() const;

  /// Scenario-file spelling with 1-based targets, e.g. `CZ 1 2`.
  std::string text() const;

  friend bool operator==(const Gate &, const Gate &) = default;

 private:
  GateKind kind_ = GateKind::X;
  std::array<unsigned, 2> targets_{};
  unsigned arity_ = 1;
  Matrix2 matrix_{};
  std::string text_;
};

/// Scenario-file name of a kind (`SDG`, `CNOT`, `U`, ...).
std::string_view gate_name(GateKind kind);

/// Parses `NAME args...` (e.g. `CZ 1 2`, `RY 1 0.7`, `U2 1 re im ...`)
/// against a register of n qubits. Throws ParseError with the 0-based
/// token index as position.
Gate parse_gate(std::span<const std::string> tokens, unsigned n);
Gate parse_gate(std::string_view spec, unsigned n);

/// An ordered gate list with named positions. A label at position k names
/// the state after the first k gates.
struct Circuit {
  unsigned n = 0;
  std::vector<Gate> gates;
  std::vector<std::pair<std::size_t, std::string>> labels;
};

/// Parses `qubits N`, `gate ...`, `label NAME` lines and `#` comments.
/// Errors carry the 1-based line number.
Circuit parse_circuit(std::string_view text);

/// Splits on ASCII whitespace.
std::vector<std::string> split_ws(std::string_view line);

}  // namespace locality_lab
