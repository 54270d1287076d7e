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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locality_lab/descriptors.hpp"
#include "locality_lab/errors.hpp"
#include "locality_lab/product_state.hpp"
#include "locality_lab/scenario.hpp"

namespace locality_lab {

/// Scenario content that parses but cannot be executed, e.g. initial
/// factors that the preparation circuit does not produce.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

/// State of all representations at one label.
struct Snapshot {
  std::string label;
  std::optional<std::string> parent;  // nullopt: the initial state
  std::vector<Gate> gates;            // applied since the parent
  ProductState state;
  std::optional<DescriptorSet> descriptors;  // nullopt after a generic gate
  FactorDiff factor_diff;                    // vs parent
  std::optional<std::vector<unsigned>> descriptor_diff;
  std::optional<ProbabilityTable> born;
  std::string born_source;  // "descriptors" or "dense"
  /// Descriptor and dense Born tables agree (nullopt: not checked).
  std::optional<bool> lockstep;
  std::vector<std::string> same_state_as;
};

struct AssertionResult {
  Assertion assertion;
  bool passed;
  std::string detail;
};

struct Report {
  unsigned n = 0;
  std::vector<Gate> prep;
  ProductState initial;
  std::vector<Snapshot> snapshots;
  std::vector<AssertionResult> assertions;

  const Snapshot &snapshot(const std::string &label) const;
  bool passed() const;
};

/// Runs the timeline in lockstep across product notation, descriptors and
/// the dense oracle, then evaluates the assertions. Throws ScenarioError
/// for inconsistent initial data.
Report run_scenario(const Scenario &sc);

/// Initial product state and descriptor set implied by the header lines.
struct Start {
  ProductState state;
  DescriptorSet descriptors;
};
Start prepare_start(const Scenario &sc);

std::string render_text(const Report &r);
/// Pretty-printed JSON following schema/report.schema.json.
std::string render_json(const Report &r);
/// Dense matrices of every snapshot in `dump` format.
std::string render_dense_dump(const Report &r);

/// One probe: a single-qubit gate applied to one qubit of a snapshot.
struct LocalityRow {
  std::string label;
  Gate gate;
  unsigned qubit;  // 0-based
  std::vector<unsigned> factors;  // 0-based changed positions
  std::optional<std::vector<unsigned>> descriptors;
  std::vector<std::string> flags;
};

struct LocalityTable {
  unsigned n = 0;
  std::vector<GateKind> gate_set;
  std::vector<LocalityRow> rows;
  /// Per label and qubit, union of factor positions changed by acting there.
  std::vector<std::string> label_notes;

  std::size_t flagged() const;
  /// Every probed row had descriptor diff exactly {acted qubit}.
  bool descriptors_local() const;
  std::size_t descriptor_rows() const;
};

/// Parses `X,Z,H`; only parameterless single-qubit gates are allowed.
std::vector<GateKind> parse_gate_set(std::string_view text);

LocalityTable check_locality(const Report &r,
                             std::span<const GateKind> gate_set);

std::string render_locality(const LocalityTable &t);

}  // namespace locality_lab
