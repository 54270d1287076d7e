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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locality_lab/gate.hpp"
#include "locality_lab/pauli_word.hpp"

namespace locality_lab {

enum class AssertionKind { Equal, NotEqual, FactorDiff, DescDiff, Expect };

struct Assertion {
  AssertionKind kind;
  std::size_t line;
  std::string text;  // the directive as written, without comments
  std::string first;
  std::string second;               // empty for Expect
  std::vector<unsigned> expected;   // 0-based positions or qubits
  std::optional<PauliWord> observable;
  double value = 0;
  double tolerance = 0;
};

enum class StepKind { Gate, Label, Branch };

struct Step {
  StepKind kind;
  std::size_t line;
  std::optional<Gate> gate;  // for StepKind::Gate
  std::string name;          // label name, or branch source label
};

/// A parsed scenario file.
///
///     qubits 2
///     prep H 1
///     prep H 2
///     factors +X1 ; +X2
///     label t0
///     gate CZ 1 2
///     label t1
///     gate Z 1
///     label t2a
///     branch t1          # back to the snapshot at t1
///     gate Z 2
///     label t2b
///     assert factordiff t1 t2a {1}
struct Scenario {
  unsigned n = 0;
  std::vector<Gate> prep;
  std::optional<std::vector<PauliWord>> factors;
  std::size_t factors_line = 0;
  std::vector<Step> steps;
  std::vector<Assertion> assertions;

  std::vector<std::string> labels() const;
};

/// Throws ParseError carrying the 1-based line number.
Scenario parse_scenario(std::string_view text);

/// Reads and parses a file; unreadable files raise ParseError at line 0.
Scenario load_scenario(const std::filesystem::path &path);

/// Parses `{1,2}`, `{ 1, 2 }` or `{}` into sorted 0-based indices.
std::vector<unsigned> parse_index_set(std::string_view text);

/// `{1,2}` from 0-based indices.
std::string render_index_set(const std::vector<unsigned> &indices);

}  // namespace locality_lab
