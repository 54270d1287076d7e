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

#include "locality_lab/gate.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "locality_lab/errors.hpp"

namespace locality_lab {

namespace {

constexpr double kUnitaryTolerance = 1e-12;

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CZ || kind == GateKind::CNOT;
}

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Matrix2 rotation(double theta, char axis) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const Complex mi(0, -1);
  switch (axis) {
    case 'X':
      return {Complex(c), mi * s, mi * s, Complex(c)};
    case 'Y':
      return {Complex(c), Complex(-s), Complex(s), Complex(c)};
    default:
      return {std::exp(Complex(0, -theta / 2)), Complex(0), Complex(0),
              std::exp(Complex(0, theta / 2))};
  }
}

struct NameEntry {
  std::string_view name;
  GateKind kind;
};

constexpr std::array<NameEntry, 8> kCliffordNames{{
    {"X", GateKind::X},
    {"Y", GateKind::Y},
    {"Z", GateKind::Z},
    {"H", GateKind::H},
    {"S", GateKind::S},
    {"SDG", GateKind::Sdg},
    {"CZ", GateKind::CZ},
    {"CNOT", GateKind::CNOT},
}};

unsigned parse_index(const std::string &tok, std::size_t token_pos,
                     unsigned n) {
  unsigned value = 0;
  const auto *first = tok.data();
  const auto *last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected qubit index, found '" + tok + "'", token_pos);
  }
  if (value == 0 || value > n) {
    throw ParseError("qubit index " + tok + " out of range [1, " +
                         std::to_string(n) + "]",
                     token_pos);
  }
  return value - 1;
}

double parse_real(const std::string &tok, std::size_t token_pos) {
  double value = 0;
  const auto *first = tok.data();
  const auto *last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError("expected real number, found '" + tok + "'", token_pos);
  }
  return value;
}

void expect_arity(std::span<const std::string> tokens, std::size_t want) {
  if (tokens.size() != want + 1) {
    throw ParseError("gate " + tokens[0] + " takes " + std::to_string(want) +
                         " argument(s), got " +
                         std::to_string(tokens.size() - 1),
                     0);
  }
}

}  // namespace

Gate Gate::single(GateKind kind, unsigned target) {
  if (is_two_qubit(kind) || kind == GateKind::Generic1Q) {
    throw DimensionError("gate " + std::string(gate_name(kind)) +
                         " is not a parameterless single-qubit gate");
  }
  Gate g;
  g.kind_ = kind;
  g.targets_ = {target, 0};
  g.arity_ = 1;
  return g;
}

Gate Gate::pair(GateKind kind, unsigned first, unsigned second) {
  if (!is_two_qubit(kind)) {
    throw DimensionError("gate " + std::string(gate_name(kind)) +
                         " is not a two-qubit gate");
  }
  if (first == second) {
    throw DimensionError("two-qubit gate needs distinct targets");
  }
  Gate g;
  g.kind_ = kind;
  g.targets_ = {first, second};
  g.arity_ = 2;
  return g;
}

Gate Gate::generic(unsigned target, const Matrix2 &m, std::string text) {
  // m m^dagger == I
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Complex acc = m[2 * r] * std::conj(m[2 * c]) +
                    m[2 * r + 1] * std::conj(m[2 * c + 1]);
      if (std::abs(acc - Complex(r == c ? 1.0 : 0.0)) > kUnitaryTolerance) {
        throw DomainError("single-qubit matrix is not unitary within 1e-12");
      }
    }
  }
  Gate g;
  g.kind_ = GateKind::Generic1Q;
  g.targets_ = {target, 0};
  g.arity_ = 1;
  g.matrix_ = m;
  g.text_ = std::move(text);
  return g;
}

Gate Gate::rx(unsigned target, double theta) {
  return generic(target, rotation(theta, 'X'),
                 "RX " + std::to_string(target + 1) + " " + format_real(theta));
}

Gate Gate::ry(unsigned target, double theta) {
  return generic(target, rotation(theta, 'Y'),
                 "RY " + std::to_string(target + 1) + " " + format_real(theta));
}

Gate Gate::rz(unsigned target, double theta) {
  return generic(target, rotation(theta, 'Z'),
                 "RZ " + std::to_string(target + 1) + " " + format_real(theta));
}

unsigned Gate::max_target() const {
  return arity_ == 2 ? std::max(targets_[0], targets_[1]) : targets_[0];
}

std::string Gate::text() const {
  if (kind_ == GateKind::Generic1Q) return text_;
  std::string out(gate_name(kind_));
  for (unsigned t : targets()) out += " " + std::to_string(t + 1);
  return out;
}

std::string_view gate_name(GateKind kind) {
  for (const auto &e : kCliffordNames) {
    if (e.kind == kind) return e.name;
  }
  return "U";
}

Gate parse_gate(std::span<const std::string> tokens, unsigned n) {
  if (tokens.empty()) throw ParseError("missing gate name", 0);
  const std::string &name = tokens[0];
  for (const auto &e : kCliffordNames) {
    if (e.name != name) continue;
    if (is_two_qubit(e.kind)) {
      expect_arity(tokens, 2);
      const unsigned a = parse_index(tokens[1], 1, n);
      const unsigned b = parse_index(tokens[2], 2, n);
      if (a == b) throw ParseError("gate " + name + " needs distinct qubits", 2);
      return Gate::pair(e.kind, a, b);
    }
    expect_arity(tokens, 1);
    return Gate::single(e.kind, parse_index(tokens[1], 1, n));
  }
  if (name == "RX" || name == "RY" || name == "RZ") {
    expect_arity(tokens, 2);
    const unsigned t = parse_index(tokens[1], 1, n);
    const double theta = parse_real(tokens[2], 2);
    return Gate::generic(t, rotation(theta, name[1]),
                         name + " " + tokens[1] + " " + tokens[2]);
  }
  if (name == "U2") {
    expect_arity(tokens, 9);
    const unsigned t = parse_index(tokens[1], 1, n);
    Matrix2 m;
    std::string text = name + " " + tokens[1];
    for (std::size_t k = 0; k < 4; ++k) {
      const double re = parse_real(tokens[2 + 2 * k], 2 + 2 * k);
      const double im = parse_real(tokens[3 + 2 * k], 3 + 2 * k);
      m[k] = Complex(re, im);
      text += " " + tokens[2 + 2 * k] + " " + tokens[3 + 2 * k];
    }
    try {
      return Gate::generic(t, m, std::move(text));
    } catch (const DomainError &e) {
      throw ParseError(e.what(), 0);
    }
  }
  throw ParseError("unknown gate '" + name + "'", 0);
}

Gate parse_gate(std::string_view spec, unsigned n) {
  const auto tokens = split_ws(spec);
  return parse_gate(std::span<const std::string>(tokens), n);
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const auto fail = [&](const std::string &msg) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ": " + msg,
                        line_no, true);
    };
    if (tokens[0] == "qubits") {
      if (circuit.n != 0) throw fail("qubit count given twice");
      if (tokens.size() != 2) throw fail("usage: qubits N");
      unsigned n = 0;
      auto [ptr, ec] = std::from_chars(
          tokens[1].data(), tokens[1].data() + tokens[1].size(), n);
      if (ec != std::errc() || ptr != tokens[1].data() + tokens[1].size() ||
          n == 0 || n > 64) {
        throw fail("qubit count must be an integer in [1, 64]");
      }
      circuit.n = n;
    } else if (tokens[0] == "gate") {
      if (circuit.n == 0) throw fail("'qubits' must come first");
      try {
        circuit.gates.push_back(parse_gate(
            std::span<const std::string>(tokens).subspan(1), circuit.n));
      } catch (const ParseError &e) {
        throw fail(e.what());
      }
    } else if (tokens[0] == "label") {
      if (circuit.n == 0) throw fail("'qubits' must come first");
      if (tokens.size() != 2) throw fail("usage: label NAME");
      for (const auto &[pos, name] : circuit.labels) {
        if (name == tokens[1]) throw fail("duplicate label '" + tokens[1] + "'");
      }
      circuit.labels.emplace_back(circuit.gates.size(), tokens[1]);
    } else {
      throw fail("unknown directive '" + tokens[0] + "'");
    }
    if (stop == text.size()) break;
  }
  if (circuit.n == 0) throw ParseError("missing 'qubits' line", line_no, true);
  return circuit;
}

}  // namespace locality_lab
