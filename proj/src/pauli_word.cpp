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

#include "locality_lab/pauli_word.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <tuple>

#include "locality_lab/errors.hpp"

namespace locality_lab {

namespace {

std::uint64_t width_mask(unsigned n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_width(unsigned n) {
  if (n == 0 || n > kMaxQubits) {
    throw DimensionError("qubit count must be in [1, 64], got " +
                         std::to_string(n));
  }
}

void check_same_width(const PauliWord &a, const PauliWord &b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("Pauli words act on " +
                         std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
  }
}

// Rank of a letter in the term-listing order X < Z < Y < I.
int listing_rank(Letter l) {
  switch (l) {
    case Letter::X:
      return 0;
    case Letter::Z:
      return 1;
    case Letter::Y:
      return 2;
    case Letter::I:
      return 3;
  }
  return 3;
}

}  // namespace

PauliWord::PauliWord(unsigned n) : n_(n) { check_width(n); }

PauliWord::PauliWord(unsigned n, std::uint64_t x_mask, std::uint64_t z_mask,
                     unsigned phase_exp)
    : n_(n), x_(x_mask), z_(z_mask), phase_(phase_exp & 3u) {
  check_width(n);
  if ((x_mask | z_mask) & ~width_mask(n)) {
    throw DimensionError("Pauli mask has bits beyond qubit " +
                         std::to_string(n));
  }
}

PauliWord PauliWord::single(unsigned n, unsigned qubit, Letter letter) {
  check_width(n);
  if (qubit >= n) {
    throw DimensionError("qubit " + std::to_string(qubit + 1) +
                         " out of range for " + std::to_string(n) + " qubits");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (letter) {
    case Letter::I:
      return PauliWord(n);
    case Letter::X:
      return PauliWord(n, bit, 0, 0);
    case Letter::Z:
      return PauliWord(n, 0, bit, 0);
    case Letter::Y:
      return PauliWord(n, bit, bit, 1);
  }
  return PauliWord(n);
}

PauliWord PauliWord::hermitian(unsigned n, std::uint64_t x_mask,
                               std::uint64_t z_mask, bool negative) {
  const unsigned ys = static_cast<unsigned>(std::popcount(x_mask & z_mask));
  const unsigned phase = (negative ? 2u : 0u) + (ys & 3u);
  return PauliWord(n, x_mask, z_mask, phase);
}

Letter PauliWord::letter(unsigned qubit) const {
  const bool xb = (x_ >> qubit) & 1u;
  const bool zb = (z_ >> qubit) & 1u;
  if (xb && zb) return Letter::Y;
  if (xb) return Letter::X;
  if (zb) return Letter::Z;
  return Letter::I;
}

unsigned PauliWord::y_count() const {
  return static_cast<unsigned>(std::popcount(x_ & z_));
}

unsigned PauliWord::weight() const {
  return static_cast<unsigned>(std::popcount(x_ | z_));
}

bool PauliWord::is_hermitian() const { return ((phase_ + y_count()) & 1u) == 0; }

int PauliWord::sign() const {
  const unsigned s = (phase_ + 4u - (y_count() & 3u)) & 3u;
  if (s == 0) return 1;
  if (s == 2) return -1;
  throw DomainError("Pauli word " + render(*this) + " is not Hermitian");
}

bool PauliWord::acts_trivially_on(unsigned qubit) const {
  return (((x_ | z_) >> qubit) & 1u) == 0;
}

PauliWord PauliWord::negated() const { return times_i_pow(2); }

PauliWord PauliWord::unsigned_part() const {
  return hermitian(n_, x_, z_, false);
}

PauliWord PauliWord::times_i_pow(unsigned k) const {
  return PauliWord(n_, x_, z_, phase_ + k);
}

PauliWord pauli_mul(const PauliWord &a, const PauliWord &b) {
  check_same_width(a, b);
  // Moving each Z_j of `a` past an X_j of `b` costs a factor -1.
  const unsigned swaps =
      static_cast<unsigned>(std::popcount(a.z_mask() & b.x_mask()));
  return PauliWord(a.num_qubits(), a.x_mask() ^ b.x_mask(),
                   a.z_mask() ^ b.z_mask(),
                   a.phase_exp() + b.phase_exp() + 2 * swaps);
}

bool commutes(const PauliWord &a, const PauliWord &b) {
  check_same_width(a, b);
  const auto overlaps = std::popcount(a.x_mask() & b.z_mask()) +
                        std::popcount(a.z_mask() & b.x_mask());
  return (overlaps & 1) == 0;
}

PauliWord parse_pauli(std::string_view text, unsigned n) {
  check_width(n);
  std::size_t pos = 0;
  std::size_t end = text.size();
  while (pos < end && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (pos == end) throw ParseError("empty Pauli word", pos);

  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == end) throw ParseError("sign without Pauli factors", pos);

  if (text[pos] == 'I') {
    if (pos + 1 != end) {
      throw ParseError("unexpected text after identity 'I'", pos + 1);
    }
    return PauliWord::hermitian(n, 0, 0, negative);
  }

  std::uint64_t xm = 0;
  std::uint64_t zm = 0;
  while (pos < end) {
    const char c = text[pos];
    if (c != 'X' && c != 'Y' && c != 'Z') {
      throw ParseError(std::string("expected X, Y or Z, found '") + c + "'",
                       pos);
    }
    const std::size_t letter_pos = pos++;
    const std::size_t digits_begin = pos;
    unsigned long index = 0;
    while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (index > kMaxQubits) break;
      ++pos;
    }
    if (pos == digits_begin) {
      throw ParseError("missing qubit index after '" + std::string(1, c) + "'",
                       pos);
    }
    if (index == 0 || index > n) {
      throw ParseError("qubit index " + std::to_string(index) +
                           " out of range [1, " + std::to_string(n) + "]",
                       digits_begin);
    }
    const std::uint64_t bit = std::uint64_t{1} << (index - 1);
    if ((xm | zm) & bit) {
      throw ParseError("qubit index " + std::to_string(index) + " repeated",
                       letter_pos);
    }
    if (c != 'Z') xm |= bit;
    if (c != 'X') zm |= bit;
  }
  return PauliWord::hermitian(n, xm, zm, negative);
}

std::string render(const PauliWord &w) {
  std::string out;
  switch ((w.phase_exp() + 4u - (w.y_count() & 3u)) & 3u) {
    case 0:
      out = "+";
      break;
    case 1:
      out = "+i";
      break;
    case 2:
      out = "-";
      break;
    default:
      out = "-i";
      break;
  }
  if (w.is_scalar()) return out + "I";
  for (unsigned q = 0; q < w.num_qubits(); ++q) {
    switch (w.letter(q)) {
      case Letter::I:
        continue;
      case Letter::X:
        out += 'X';
        break;
      case Letter::Y:
        out += 'Y';
        break;
      case Letter::Z:
        out += 'Z';
        break;
    }
    out += std::to_string(q + 1);
  }
  return out;
}

std::string render_compact(const PauliWord &w) {
  std::string s = render(w);
  if (s.size() > 1 && s[0] == '+' && s[1] != 'i') s.erase(0, 1);
  return s;
}

bool canonical_less(const PauliWord &a, const PauliWord &b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  const unsigned n = std::min(a.num_qubits(), b.num_qubits());
  for (unsigned q = 0; q < n; ++q) {
    const int ra = listing_rank(a.letter(q));
    const int rb = listing_rank(b.letter(q));
    if (ra != rb) return ra < rb;
  }
  return std::make_tuple(a.phase_exp(), a.num_qubits()) <
         std::make_tuple(b.phase_exp(), b.num_qubits());
}

}  // namespace locality_lab
