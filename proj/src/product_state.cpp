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

#include "locality_lab/product_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <optional>

#include "locality_lab/clifford.hpp"
#include "locality_lab/dense_state.hpp"
#include "locality_lab/errors.hpp"

namespace locality_lab {

namespace {

// Row-reduced basis of the symplectic vectors of a generator list. Each
// row remembers which generators were XORed into it.
class SymplecticBasis {
 public:
  /// Adds (x, z); returns false if it is dependent on the rows so far.
  bool insert(std::uint64_t x, std::uint64_t z, std::uint64_t combo) {
    reduce(x, z, combo);
    if (x == 0 && z == 0) return false;
    rows_.push_back({x, z, combo});
    return true;
  }

  /// Generators (as a bitmask) whose product has masks (x, z), if any.
  std::optional<std::uint64_t> decompose(std::uint64_t x,
                                         std::uint64_t z) const {
    std::uint64_t combo = 0;
    reduce(x, z, combo);
    if (x != 0 || z != 0) return std::nullopt;
    return combo;
  }

 private:
  struct Row {
    std::uint64_t x, z, combo;
  };

  static bool pivot_set(const Row &row, std::uint64_t x, std::uint64_t z) {
    if (row.x != 0) {
      return (x >> std::countr_zero(row.x)) & 1u;
    }
    return (z >> std::countr_zero(row.z)) & 1u;
  }

  // Rows are kept so that each pivot is absent from every later row.
  void reduce(std::uint64_t &x, std::uint64_t &z, std::uint64_t &combo) const {
    for (const Row &row : rows_) {
      if (pivot_set(row, x, z)) {
        x ^= row.x;
        z ^= row.z;
        combo ^= row.combo;
      }
    }
  }

  std::vector<Row> rows_;
};

void check_commuting(const std::vector<Factor> &factors) {
  for (std::size_t a = 0; a < factors.size(); ++a) {
    const auto *pa = std::get_if<PauliWord>(&factors[a]);
    if (!pa) continue;
    for (std::size_t b = a + 1; b < factors.size(); ++b) {
      const auto *pb = std::get_if<PauliWord>(&factors[b]);
      if (pb && !commutes(*pa, *pb)) {
        throw InvalidFactorization(
            "factors " + std::to_string(a + 1) + " (" + render(*pa) +
            ") and " + std::to_string(b + 1) + " (" + render(*pb) +
            ") anticommute");
      }
    }
  }
}

PauliWord product_of(const std::vector<PauliWord> &gens, std::uint64_t combo,
                     unsigned n) {
  PauliWord acc(n);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if ((combo >> k) & 1u) acc = pauli_mul(acc, gens[k]);
  }
  return acc;
}

// Signed stabilizer group of `a` is contained in that of `b`.
bool group_contained(const std::vector<PauliWord> &a,
                     const std::vector<PauliWord> &b, unsigned n) {
  SymplecticBasis basis;
  for (std::size_t k = 0; k < b.size(); ++k) {
    basis.insert(b[k].x_mask(), b[k].z_mask(), std::uint64_t{1} << k);
  }
  for (const PauliWord &w : a) {
    const auto combo = basis.decompose(w.x_mask(), w.z_mask());
    if (!combo || product_of(b, *combo, n) != w) return false;
  }
  return true;
}

std::string term_sign(double c, bool first) {
  if (first) return c < 0 ? "-" : "";
  return c < 0 ? " - " : " + ";
}

}  // namespace

ProductState ProductState::from_factors(unsigned n,
                                        std::vector<PauliWord> words) {
  std::vector<Factor> factors;
  factors.reserve(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    const PauliWord &w = words[k];
    if (w.num_qubits() != n) {
      throw DimensionError("factor " + std::to_string(k + 1) + " acts on " +
                           std::to_string(w.num_qubits()) + " qubits, not " +
                           std::to_string(n));
    }
    if (!w.is_hermitian()) {
      throw InvalidFactorization("factor " + std::to_string(k + 1) + " (" +
                                 render(w) + ") is not Hermitian");
    }
    if (w.is_scalar()) {
      throw InvalidFactorization("factor " + std::to_string(k + 1) +
                                 " is a multiple of the identity");
    }
    factors.emplace_back(w);
  }
  check_commuting(factors);
  if (words.size() > n) {
    throw RankError(std::to_string(words.size()) +
                    " commuting factors cannot be independent on " +
                    std::to_string(n) + " qubits");
  }
  SymplecticBasis basis;
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (!basis.insert(words[k].x_mask(), words[k].z_mask(),
                      std::uint64_t{1} << k)) {
      throw RankError("factor " + std::to_string(k + 1) + " (" +
                      render(words[k]) +
                      ") is a product of earlier factors up to sign");
    }
  }
  return ProductState(n, std::move(factors));
}

ProductState ProductState::parse(std::string_view text, unsigned n) {
  const auto tokens = split_ws(text);
  std::size_t start = 0;
  if (!tokens.empty() && tokens[0] == "factors") {
    start = text.find("factors") + 7;
  }
  std::vector<PauliWord> words;
  std::string_view rest = text.substr(start);
  std::size_t offset = start;
  while (true) {
    const std::size_t semi = rest.find(';');
    const std::string_view piece = rest.substr(0, semi);
    try {
      words.push_back(parse_pauli(piece, n));
    } catch (const ParseError &e) {
      throw ParseError(e.what(), offset + e.position());
    }
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
    offset += semi + 1;
  }
  return from_factors(n, std::move(words));
}

bool ProductState::all_pauli() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor &f) {
    return std::holds_alternative<PauliWord>(f);
  });
}

std::vector<PauliWord> ProductState::words() const {
  std::vector<PauliWord> out;
  out.reserve(factors_.size());
  for (const Factor &f : factors_) {
    const auto *w = std::get_if<PauliWord>(&f);
    if (!w) {
      throw UnsupportedRepresentation(
          "state has a dense factor; no Pauli form available");
    }
    out.push_back(*w);
  }
  return out;
}

ProductState evolve(const ProductState &s, const Gate &g) {
  const unsigned n = s.num_qubits();
  if (g.max_target() >= n) {
    throw DimensionError("gate " + g.text() + " targets a qubit beyond " +
                         std::to_string(n));
  }
  std::optional<DenseOperator> u;
  const auto unitary = [&]() -> const DenseOperator & {
    if (!u) u = dense_of_gate(g, n);
    return *u;
  };

  std::vector<Factor> out;
  out.reserve(s.size());
  for (const Factor &f : s.factors()) {
    if (const auto *w = std::get_if<PauliWord>(&f)) {
      if (g.is_clifford()) {
        out.emplace_back(conjugate(g, *w));
      } else if (w->acts_trivially_on(g.targets()[0])) {
        out.emplace_back(*w);
      } else {
        out.emplace_back(conjugate_dense(unitary(), dense_of_factor(f, n)));
      }
    } else {
      out.emplace_back(conjugate_dense(unitary(), std::get<DenseOperator>(f)));
    }
  }
  check_commuting(out);
  return ProductState(n, std::move(out));
}

std::string_view change_kind_name(ChangeKind kind) {
  switch (kind) {
    case ChangeKind::Unchanged:
      return "UNCHANGED";
    case ChangeKind::SignFlip:
      return "SIGN_FLIP";
    case ChangeKind::WordChange:
      return "WORD_CHANGE";
    case ChangeKind::LeftPauliSector:
      return "LEFT_PAULI_SECTOR";
  }
  return "UNCHANGED";
}

std::vector<std::size_t> FactorDiff::changed() const {
  std::vector<std::size_t> out;
  for (const auto &e : entries) {
    if (e.kind != ChangeKind::Unchanged) out.push_back(e.position);
  }
  return out;
}

FactorDiff factor_diff(const ProductState &before, const ProductState &after) {
  if (before.num_qubits() != after.num_qubits() ||
      before.size() != after.size()) {
    throw IncomparableError("states have different shapes (" +
                            std::to_string(before.num_qubits()) + " qubits/" +
                            std::to_string(before.size()) + " factors vs " +
                            std::to_string(after.num_qubits()) + "/" +
                            std::to_string(after.size()) + ")");
  }
  const unsigned n = before.num_qubits();
  FactorDiff diff;
  for (std::size_t k = 0; k < before.size(); ++k) {
    const Factor &a = before.factor(k);
    const Factor &b = after.factor(k);
    const auto *wa = std::get_if<PauliWord>(&a);
    const auto *wb = std::get_if<PauliWord>(&b);
    ChangeKind kind;
    if (wa && wb) {
      if (*wa == *wb) {
        kind = ChangeKind::Unchanged;
      } else if (wa->x_mask() == wb->x_mask() && wa->z_mask() == wb->z_mask()) {
        kind = ChangeKind::SignFlip;
      } else {
        kind = ChangeKind::WordChange;
      }
    } else {
      const bool same =
          approx_equal(dense_of_factor(a, n), dense_of_factor(b, n));
      if (same) {
        kind = ChangeKind::Unchanged;
      } else if (wa) {
        kind = ChangeKind::LeftPauliSector;
      } else {
        kind = ChangeKind::WordChange;
      }
    }
    diff.entries.push_back({k, a, b, kind});
  }
  return diff;
}

std::vector<PauliTerm> expand_to_pauli_sum(const ProductState &s) {
  const auto words = s.words();
  if (words.size() > kMaxExpansionFactors) {
    throw CapacityError("expansion of " + std::to_string(words.size()) +
                        " factors exceeds the limit of " +
                        std::to_string(kMaxExpansionFactors));
  }
  const unsigned n = s.num_qubits();
  const double scale = std::ldexp(1.0, -static_cast<int>(n));
  std::vector<PauliTerm> terms;
  terms.reserve(std::size_t{1} << words.size());
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << words.size());
       ++subset) {
    const PauliWord w = product_of(words, subset, n);
    // Products of commuting Hermitian words are Hermitian.
    terms.push_back({scale * w.sign(), w.unsigned_part()});
  }
  std::sort(terms.begin(), terms.end(),
            [](const PauliTerm &a, const PauliTerm &b) {
              return canonical_less(a.word, b.word);
            });
  return terms;
}

bool state_equal(const ProductState &a, const ProductState &b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("states act on different qubit counts");
  }
  if (a.all_pauli() && b.all_pauli()) {
    if (a.size() != b.size()) return false;
    const auto wa = a.words();
    const auto wb = b.words();
    return group_contained(wa, wb, a.num_qubits());
  }
  return approx_equal(dense_of_product_state(a), dense_of_product_state(b));
}

std::string normalization_text(unsigned n) {
  if (n < 64) return "1/" + std::to_string(std::uint64_t{1} << n);
  return "1/2^" + std::to_string(n);
}

std::string render_factor(const Factor &f) {
  if (const auto *w = std::get_if<PauliWord>(&f)) {
    const std::string body = render(w->unsigned_part()).substr(1);
    return std::string("(I ") + (w->sign() < 0 ? "- " : "+ ") + body + ")";
  }
  return "(I + [dense])";
}

std::string render_product(const ProductState &s) {
  std::string out = normalization_text(s.num_qubits());
  if (s.size() == 0) return out + " I";
  out += ' ';
  for (const Factor &f : s.factors()) out += render_factor(f);
  return out;
}

std::string render_pauli_sum(unsigned n, const std::vector<PauliTerm> &terms) {
  const double scale = std::ldexp(1.0, -static_cast<int>(n));
  std::string out = normalization_text(n) + " (";
  bool first = true;
  for (const PauliTerm &t : terms) {
    const double ratio = t.coefficient / scale;
    out += term_sign(ratio, first);
    if (std::abs(std::abs(ratio) - 1.0) > 1e-12) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g ", std::abs(ratio));
      out += buf;
    }
    out += t.word.is_scalar() ? "I" : render(t.word).substr(1);
    first = false;
  }
  return out + ")";
}

}  // namespace locality_lab
