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

#include "locality_lab/clifford.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <utility>

#include "locality_lab/errors.hpp"

namespace locality_lab {

namespace {

enum class Role { First, Second };

// Image of X (on_x) or Z on the target in `role` under U . U^dagger.
PauliWord letter_image(GateKind kind, std::span<const unsigned> t, Role role,
                       bool on_x, unsigned n) {
  const unsigned q = role == Role::First ? t[0] : t[1];
  const auto X = [&](unsigned j) { return PauliWord::x(n, j); };
  const auto Z = [&](unsigned j) { return PauliWord::z(n, j); };
  switch (kind) {
    case GateKind::X:
      return on_x ? X(q) : Z(q).negated();
    case GateKind::Y:
      return on_x ? X(q).negated() : Z(q).negated();
    case GateKind::Z:
      return on_x ? X(q).negated() : Z(q);
    case GateKind::H:
      return on_x ? Z(q) : X(q);
    case GateKind::S:
      return on_x ? PauliWord::y(n, q) : Z(q);
    case GateKind::Sdg:
      return on_x ? PauliWord::y(n, q).negated() : Z(q);
    case GateKind::CZ: {
      const unsigned other = role == Role::First ? t[1] : t[0];
      return on_x ? pauli_mul(X(q), Z(other)) : Z(q);
    }
    case GateKind::CNOT:
      if (role == Role::First) {
        return on_x ? pauli_mul(X(t[0]), X(t[1])) : Z(t[0]);
      }
      return on_x ? X(t[1]) : pauli_mul(Z(t[0]), Z(t[1]));
    case GateKind::Generic1Q:
      break;
  }
  throw UnsupportedRepresentation("no Pauli image for generic gate");
}

GateKind inverse_kind(GateKind kind) {
  if (kind == GateKind::S) return GateKind::Sdg;
  if (kind == GateKind::Sdg) return GateKind::S;
  return kind;
}

void check_gate(const Gate &g, const PauliWord &p) {
  if (!g.is_clifford()) {
    throw UnsupportedRepresentation(
        "gate " + g.text() +
        " is not Clifford; its action leaves the Pauli group, use dense "
        "conjugation");
  }
  if (g.max_target() >= p.num_qubits()) {
    throw DimensionError("gate " + g.text() + " targets a qubit beyond " +
                         std::to_string(p.num_qubits()));
  }
}

PauliWord conjugate_with(GateKind kind, const Gate &g, const PauliWord &p) {
  const unsigned n = p.num_qubits();
  const auto targets = g.targets();
  std::uint64_t target_bits = 0;
  for (unsigned t : targets) target_bits |= std::uint64_t{1} << t;

  // Letters on different qubits commute, so p = i^k * Off * prod_t X_t Z_t.
  PauliWord out(n, p.x_mask() & ~target_bits, p.z_mask() & ~target_bits,
                p.phase_exp());
  for (unsigned idx = 0; idx < targets.size(); ++idx) {
    const unsigned q = targets[idx];
    const Role role = idx == 0 ? Role::First : Role::Second;
    if ((p.x_mask() >> q) & 1u) {
      out = pauli_mul(out, letter_image(kind, targets, role, true, n));
    }
    if ((p.z_mask() >> q) & 1u) {
      out = pauli_mul(out, letter_image(kind, targets, role, false, n));
    }
  }
  return out;
}

}  // namespace

PauliWord conjugate(const Gate &g, const PauliWord &p) {
  check_gate(g, p);
  return conjugate_with(g.kind(), g, p);
}

PauliWord inverse_conjugate(const Gate &g, const PauliWord &p) {
  check_gate(g, p);
  return conjugate_with(inverse_kind(g.kind()), g, p);
}

PauliWord conjugate_cz_by_expansion(const Gate &g, const PauliWord &p) {
  if (g.kind() != GateKind::CZ) {
    throw UnsupportedRepresentation("expansion cross-check is CZ only");
  }
  check_gate(g, p);
  const unsigned n = p.num_qubits();
  const PauliWord za = PauliWord::z(n, g.targets()[0]);
  const PauliWord zb = PauliWord::z(n, g.targets()[1]);
  const std::array<std::pair<int, PauliWord>, 4> terms{{
      {1, PauliWord(n)},
      {1, za},
      {1, zb},
      {-1, pauli_mul(za, zb)},
  }};

  // Gaussian-integer coefficient per (x, z) base word of phase 0.
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<int, int>> acc;
  for (const auto &[ca, a] : terms) {
    for (const auto &[cb, b] : terms) {
      const PauliWord w = pauli_mul(pauli_mul(a, p), b);
      int re = ca * cb;
      int im = 0;
      for (unsigned k = 0; k < w.phase_exp(); ++k) {
        std::tie(re, im) = std::make_pair(-im, re);
      }
      auto &slot = acc[{w.x_mask(), w.z_mask()}];
      slot.first += re;
      slot.second += im;
    }
  }

  std::optional<PauliWord> result;
  for (const auto &[masks, coeff] : acc) {
    if (coeff.first == 0 && coeff.second == 0) continue;
    unsigned phase = 0;
    if (coeff == std::make_pair(4, 0)) {
      phase = 0;
    } else if (coeff == std::make_pair(0, 4)) {
      phase = 1;
    } else if (coeff == std::make_pair(-4, 0)) {
      phase = 2;
    } else if (coeff == std::make_pair(0, -4)) {
      phase = 3;
    } else {
      throw DomainError("CZ expansion produced a non-unit coefficient");
    }
    if (result) throw DomainError("CZ expansion produced several terms");
    result = PauliWord(n, masks.first, masks.second, phase);
  }
  if (!result) throw DomainError("CZ expansion cancelled to zero");
  return *result;
}

}  // namespace locality_lab
