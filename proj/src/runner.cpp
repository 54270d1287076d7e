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

#include "locality_lab/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "locality_lab/dense_state.hpp"
#include "locality_lab/errors.hpp"

namespace locality_lab {

namespace {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0 ? 0.0 : v);
  return buf;
}

std::vector<unsigned> to_unsigned(const std::vector<std::size_t> &v) {
  return {v.begin(), v.end()};
}

std::vector<unsigned> all_qubits(unsigned n) {
  std::vector<unsigned> q(n);
  for (unsigned i = 0; i < n; ++i) q[i] = i;
  return q;
}

std::string describe_prep(const std::vector<Gate> &prep) {
  if (prep.empty()) return "|0...0>";
  std::string out;
  for (const Gate &g : prep) out += (out.empty() ? "" : "; ") + g.text();
  return out;
}

void fill_born(Snapshot &s, unsigned n) {
  if (n > kMaxBornQubits) return;
  const auto qubits = all_qubits(n);
  const bool dense_ok = n <= dense_qubit_cap();
  std::optional<ProbabilityTable> dense_table;
  if (dense_ok) {
    dense_table = born_probabilities(dense_of_product_state(s.state), qubits);
  }
  if (s.descriptors) {
    s.born = born_distribution(*s.descriptors, qubits);
    s.born_source = "descriptors";
    if (dense_table) {
      bool ok = true;
      for (std::size_t k = 0; k < s.born->p.size(); ++k) {
        ok = ok && std::abs(s.born->p[k] - dense_table->p[k]) <= kDensityTolerance;
      }
      s.lockstep = ok;
    }
  } else if (dense_table) {
    s.born = std::move(dense_table);
    s.born_source = "dense";
  }
}

double dense_expectation(const ProductState &s, const PauliWord &p) {
  const DenseOperator rho = dense_of_product_state(s);
  return (rho * dense_of_word(p)).trace().real();
}

AssertionResult evaluate(const Assertion &a, const Report &r) {
  const Snapshot &first = r.snapshot(a.first);
  switch (a.kind) {
    case AssertionKind::Equal:
    case AssertionKind::NotEqual: {
      const Snapshot &second = r.snapshot(a.second);
      const bool equal = state_equal(first.state, second.state);
      const bool want = a.kind == AssertionKind::Equal;
      std::string detail = std::string(equal ? "states equal: " : "states differ: ") +
                           render_product(first.state) + " vs " +
                           render_product(second.state);
      return {a, equal == want, detail};
    }
    case AssertionKind::FactorDiff: {
      const Snapshot &second = r.snapshot(a.second);
      const auto got = to_unsigned(factor_diff(first.state, second.state).changed());
      return {a, got == a.expected,
              "expected " + render_index_set(a.expected) + ", got " +
                  render_index_set(got)};
    }
    case AssertionKind::DescDiff: {
      const Snapshot &second = r.snapshot(a.second);
      if (!first.descriptors || !second.descriptors) {
        return {a, false, "descriptors unavailable after a generic gate"};
      }
      const auto got = descriptor_diff(*first.descriptors, *second.descriptors);
      return {a, got == a.expected,
              "expected " + render_index_set(a.expected) + ", got " +
                  render_index_set(got)};
    }
    case AssertionKind::Expect: {
      double got = 0;
      std::string source;
      try {
        if (first.descriptors) {
          got = expectation(*first.descriptors, *a.observable);
          source = "descriptors";
        } else {
          got = dense_expectation(first.state, *a.observable);
          source = "dense";
        }
      } catch (const Error &e) {
        return {a, false, e.what()};
      }
      const bool ok = std::abs(got - a.value) <= a.tolerance;
      return {a, ok,
              "expected " + format_value(a.value) + " +- " +
                  format_value(a.tolerance) + ", got " + format_value(got) +
                  " (" + source + ")"};
    }
  }
  return {a, false, "unknown assertion"};
}

}  // namespace

const Snapshot &Report::snapshot(const std::string &label) const {
  for (const Snapshot &s : snapshots) {
    if (s.label == label) return s;
  }
  throw ScenarioError("no snapshot labelled '" + label + "'");
}

bool Report::passed() const {
  const bool asserts = std::all_of(
      assertions.begin(), assertions.end(),
      [](const AssertionResult &a) { return a.passed; });
  const bool lockstep = std::all_of(
      snapshots.begin(), snapshots.end(),
      [](const Snapshot &s) { return s.lockstep.value_or(true); });
  return asserts && lockstep;
}

Start prepare_start(const Scenario &sc) {
  const unsigned n = sc.n;
  std::vector<PauliWord> zs;
  for (unsigned q = 0; q < n; ++q) zs.push_back(PauliWord::z(n, q));
  ProductState prepared = ProductState::from_factors(n, std::move(zs));
  DescriptorSet desc = DescriptorSet::initial(n);
  for (const Gate &g : sc.prep) {
    prepared = evolve(prepared, g);
    desc = evolve_descriptors(desc, g);
  }
  if (!sc.factors) return {std::move(prepared), std::move(desc)};

  const std::string where = "line " + std::to_string(sc.factors_line) + ": ";
  std::optional<ProductState> given;
  try {
    given = ProductState::from_factors(n, *sc.factors);
  } catch (const InvalidFactorization &e) {
    throw ScenarioError(where + e.what());
  } catch (const RankError &e) {
    throw ScenarioError(where + e.what());
  }
  if (!state_equal(*given, prepared)) {
    throw ScenarioError(where + "factors " + render_product(*given) +
                        " do not match the state prepared by " +
                        describe_prep(sc.prep) + " (" +
                        render_product(prepared) + ")");
  }
  return {std::move(*given), std::move(desc)};
}

Report run_scenario(const Scenario &sc) {
  const unsigned n = sc.n;
  Start start = prepare_start(sc);
  Report report{n, sc.prep, start.state, {}, {}};

  ProductState state = start.state;
  std::optional<DescriptorSet> desc = start.descriptors;
  std::optional<std::string> parent;
  std::vector<Gate> pending;

  for (const Step &step : sc.steps) {
    switch (step.kind) {
      case StepKind::Gate: {
        const Gate &g = *step.gate;
        try {
          state = evolve(state, g);
        } catch (const CapacityError &e) {
          throw ScenarioError("line " + std::to_string(step.line) + ": " +
                              e.what());
        }
        if (desc && g.is_clifford()) {
          desc = evolve_descriptors(*desc, g);
        } else {
          desc.reset();
        }
        pending.push_back(g);
        break;
      }
      case StepKind::Label: {
        const ProductState &before =
            parent ? report.snapshot(*parent).state : report.initial;
        const std::optional<DescriptorSet> before_desc =
            parent ? report.snapshot(*parent).descriptors
                   : std::optional<DescriptorSet>(start.descriptors);
        Snapshot snap{step.name,
                      parent,
                      pending,
                      state,
                      desc,
                      factor_diff(before, state),
                      std::nullopt,
                      std::nullopt,
                      {},
                      std::nullopt,
                      {}};
        if (desc && before_desc) {
          snap.descriptor_diff = descriptor_diff(*before_desc, *desc);
        }
        fill_born(snap, n);
        report.snapshots.push_back(std::move(snap));
        parent = step.name;
        pending.clear();
        break;
      }
      case StepKind::Branch: {
        const Snapshot &from = report.snapshot(step.name);
        state = from.state;
        desc = from.descriptors;
        parent = step.name;
        pending.clear();
        break;
      }
    }
  }

  for (std::size_t i = 0; i < report.snapshots.size(); ++i) {
    for (std::size_t j = 0; j < report.snapshots.size(); ++j) {
      if (i == j) continue;
      bool equal = false;
      try {
        equal = state_equal(report.snapshots[i].state, report.snapshots[j].state);
      } catch (const CapacityError &) {
        continue;
      }
      if (equal) {
        report.snapshots[i].same_state_as.push_back(report.snapshots[j].label);
      }
    }
  }

  for (const Assertion &a : sc.assertions) {
    report.assertions.push_back(evaluate(a, report));
  }
  return report;
}

}  // namespace locality_lab
