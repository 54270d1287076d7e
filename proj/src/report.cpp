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

#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "locality_lab/dense_state.hpp"
#include "locality_lab/runner.hpp"

namespace locality_lab {

namespace {

using Json = nlohmann::ordered_json;

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", std::abs(p) < 5e-7 ? 0.0 : p);
  return buf;
}

std::string join(const std::vector<std::string> &items, const char *sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<unsigned> changed_positions(const FactorDiff &d) {
  const auto c = d.changed();
  return {c.begin(), c.end()};
}

std::optional<std::string> tensor_sum(const ProductState &s) {
  if (!s.all_pauli() || s.size() > kMaxExpansionFactors) return std::nullopt;
  return render_pauli_sum(s.num_qubits(), expand_to_pauli_sum(s));
}

std::vector<std::string> gate_texts(const std::vector<Gate> &gates) {
  std::vector<std::string> out;
  for (const Gate &g : gates) out.push_back(g.text());
  return out;
}

Json factor_json(const Factor &f, std::size_t position) {
  Json j;
  j["position"] = position + 1;
  if (const auto *w = std::get_if<PauliWord>(&f)) {
    j["kind"] = "pauli";
    j["word"] = render(*w);
  } else {
    j["kind"] = "dense";
    j["word"] = nullptr;
  }
  j["text"] = render_factor(f);
  return j;
}

}  // namespace

std::string render_text(const Report &r) {
  std::string out;
  out += "qubits: " + std::to_string(r.n) + "\n";
  out += "preparation: " +
         (r.prep.empty() ? std::string("none") : join(gate_texts(r.prep), "; ")) +
         "\n";
  out += "initial: " + render_product(r.initial) + "\n";

  for (const Snapshot &s : r.snapshots) {
    out += "\n== " + s.label + " (from " + s.parent.value_or("initial") + ")\n";
    out += "gates: " +
           (s.gates.empty() ? std::string("none") : join(gate_texts(s.gates), "; ")) +
           "\n";
    out += "product: " + render_product(s.state) + "\n";
    out += "tensor sum: " + tensor_sum(s.state).value_or("n/a (dense factors)") +
           "\n";
    if (s.descriptors) {
      std::vector<std::string> parts;
      for (unsigned q = 0; q < r.n; ++q) {
        parts.push_back(render_descriptor(*s.descriptors, q));
      }
      out += "descriptors: " + join(parts, "; ") + "\n";
    } else {
      out += "descriptors: n/a (generic gate applied)\n";
    }
    out += "factor diff: " + render_index_set(changed_positions(s.factor_diff)) +
           "\n";
    for (const FactorChange &c : s.factor_diff.entries) {
      if (c.kind == ChangeKind::Unchanged) continue;
      out += "  " + std::to_string(c.position + 1) + ": " +
             std::string(change_kind_name(c.kind)) + " " +
             render_factor(c.before) + " -> " + render_factor(c.after) + "\n";
    }
    out += "descriptor diff: " +
           (s.descriptor_diff ? render_index_set(*s.descriptor_diff)
                              : std::string("n/a")) +
           "\n";
    if (s.born) {
      std::vector<std::string> cells;
      for (std::size_t k = 0; k < s.born->p.size(); ++k) {
        cells.push_back(s.born->label(k) + " " + format_probability(s.born->p[k]));
      }
      std::string source = s.born_source;
      if (s.lockstep) source += *s.lockstep ? ", dense agrees" : ", DENSE DISAGREES";
      out += "born (" + source + "): " + join(cells, ", ") + "\n";
    } else {
      out += "born: n/a\n";
    }
    out += "same state as: " +
           (s.same_state_as.empty() ? std::string("none")
                                    : join(s.same_state_as, ", ")) +
           "\n";
  }

  std::size_t passed = 0;
  if (!r.assertions.empty()) out += "\n== assertions\n";
  for (const AssertionResult &a : r.assertions) {
    passed += a.passed;
    out += std::string(a.passed ? "PASS" : "FAIL") + " line " +
           std::to_string(a.assertion.line) + ": " + a.assertion.text + " (" +
           a.detail + ")\n";
  }
  out += "\nresult: " + std::to_string(passed) + " of " +
         std::to_string(r.assertions.size()) + " assertions passed" +
         (r.passed() ? "" : "; FAILED") + "\n";
  return out;
}

std::string render_json(const Report &r) {
  Json root;
  root["qubits"] = r.n;
  root["preparation"] = gate_texts(r.prep);
  Json initial;
  initial["product"] = render_product(r.initial);
  initial["factors"] = Json::array();
  for (std::size_t k = 0; k < r.initial.size(); ++k) {
    initial["factors"].push_back(factor_json(r.initial.factor(k), k));
  }
  root["initial"] = initial;

  root["labels"] = Json::array();
  for (const Snapshot &s : r.snapshots) {
    Json j;
    j["name"] = s.label;
    j["parent"] = s.parent ? Json(*s.parent) : Json(nullptr);
    j["gates"] = gate_texts(s.gates);
    j["product"] = render_product(s.state);
    j["factors"] = Json::array();
    for (std::size_t k = 0; k < s.state.size(); ++k) {
      j["factors"].push_back(factor_json(s.state.factor(k), k));
    }
    const auto sum = tensor_sum(s.state);
    j["tensor_sum"] = sum ? Json(*sum) : Json(nullptr);
    if (s.descriptors) {
      Json d = Json::array();
      for (unsigned q = 0; q < r.n; ++q) {
        d.push_back({{"qubit", q + 1},
                     {"x", render(s.descriptors->x_component(q))},
                     {"z", render(s.descriptors->z_component(q))},
                     {"text", render_descriptor(*s.descriptors, q)}});
      }
      j["descriptors"] = d;
    } else {
      j["descriptors"] = nullptr;
    }
    Json fd;
    Json changed = Json::array();
    Json entries = Json::array();
    for (const FactorChange &c : s.factor_diff.entries) {
      if (c.kind == ChangeKind::Unchanged) continue;
      changed.push_back(c.position + 1);
      entries.push_back({{"position", c.position + 1},
                         {"change", std::string(change_kind_name(c.kind))},
                         {"before", render_factor(c.before)},
                         {"after", render_factor(c.after)}});
    }
    fd["changed"] = changed;
    fd["entries"] = entries;
    j["factor_diff"] = fd;
    if (s.descriptor_diff) {
      Json dd = Json::array();
      for (unsigned q : *s.descriptor_diff) dd.push_back(q + 1);
      j["descriptor_diff"] = dd;
    } else {
      j["descriptor_diff"] = nullptr;
    }
    if (s.born) {
      Json b;
      Json qs = Json::array();
      for (unsigned q : s.born->qubits) qs.push_back(q + 1);
      b["qubits"] = qs;
      b["source"] = s.born_source;
      Json probs = Json::object();
      for (std::size_t k = 0; k < s.born->p.size(); ++k) {
        const double p = s.born->p[k];
        probs[s.born->label(k)] = std::abs(p) < 5e-16 ? 0.0 : p;
      }
      b["probabilities"] = probs;
      j["born"] = b;
    } else {
      j["born"] = nullptr;
    }
    j["lockstep"] = s.lockstep ? Json(*s.lockstep) : Json(nullptr);
    j["same_state_as"] = s.same_state_as;
    root["labels"].push_back(j);
  }

  root["assertions"] = Json::array();
  for (const AssertionResult &a : r.assertions) {
    root["assertions"].push_back({{"line", a.assertion.line},
                                  {"text", a.assertion.text},
                                  {"passed", a.passed},
                                  {"detail", a.detail}});
  }
  root["passed"] = r.passed();
  return root.dump(2) + "\n";
}

std::string render_dense_dump(const Report &r) {
  std::string out;
  for (const Snapshot &s : r.snapshots) {
    out += "== " + s.label + "\n";
    out += dump(dense_of_product_state(s.state));
  }
  return out;
}

}  // namespace locality_lab
