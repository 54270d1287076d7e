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

// locality-lab: runs scenario files through product notation, descriptors
// and the dense oracle side by side.

#include <CLI11.hpp>
#include <iostream>

#include "locality_lab/errors.hpp"
#include "locality_lab/product_state.hpp"
#include "locality_lab/runner.hpp"
#include "locality_lab/scenario.hpp"

namespace ll = locality_lab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

int run_command(const std::string &path, bool json, bool dump_dense) {
  const ll::Scenario sc = ll::load_scenario(path);
  const ll::Report report = ll::run_scenario(sc);
  std::cout << (json ? ll::render_json(report) : ll::render_text(report));
  if (dump_dense) std::cout << ll::render_dense_dump(report);
  if (!report.passed()) {
    for (const auto &a : report.assertions) {
      if (!a.passed) {
        std::cerr << path << ":" << a.assertion.line
                  << ": assertion failed: " << a.assertion.text << " ("
                  << a.detail << ")\n";
      }
    }
    return kExitAssertion;
  }
  return kExitPass;
}

int check_locality_command(const std::string &path, const std::string &gates) {
  const auto gate_set = ll::parse_gate_set(gates);
  const ll::Report report = ll::run_scenario(ll::load_scenario(path));
  const ll::LocalityTable table = ll::check_locality(report, gate_set);
  std::cout << ll::render_locality(table);
  return table.descriptors_local() ? kExitPass : kExitAssertion;
}

int expand_command(const std::string &factors, unsigned n) {
  const auto state = ll::ProductState::parse(factors, n);
  std::cout << ll::render_pauli_sum(n, ll::expand_to_pauli_sum(state)) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Product-notation, descriptor and dense-oracle circuit lab"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  bool dump_dense = false;
  auto *run = app.add_subcommand("run", "Run a scenario file and report");
  run->add_option("file", path, "Scenario file")->required();
  run->add_flag("--json", json, "Emit the JSON report");
  run->add_flag("--dump-dense", dump_dense,
                "Append the dense matrix of every label");

  std::string gates = "X,Z,H";
  auto *check = app.add_subcommand(
      "check-locality", "Probe whether factor diffs identify the acted qubit");
  check->add_option("file", path, "Scenario file")->required();
  check->add_option("--gates", gates, "Comma-separated single-qubit gates")
      ->capture_default_str();

  std::string factors;
  unsigned n = 0;
  auto *expand = app.add_subcommand("expand", "Print the tensor-sum form");
  expand->add_option("factors", factors, "e.g. \"+X1Z2 ; +Z1X2\"")->required();
  expand->add_option("-n", n, "Qubit count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return run_command(path, json, dump_dense);
    if (*check) return check_locality_command(path, gates);
    if (*expand) return expand_command(factors, n);
  } catch (const ll::ParseError &e) {
    std::cerr << (path.empty() ? std::string("input") : path) << ": "
              << e.what() << "\n";
    return kExitUsage;
  } catch (const ll::Error &e) {
    std::cerr << (path.empty() ? std::string("input") : path) << ": "
              << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
