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

#include <gtest/gtest.h>

#include "locality_lab/dense.hpp"
#include "locality_lab/errors.hpp"
#include "test_support.hpp"

using namespace locality_lab;
using locality_lab::testing::random_word;
using locality_lab::testing::Rng;

namespace {

PauliWord P(const char *text, unsigned n) { return parse_pauli(text, n); }

}  // namespace

TEST(pauli_word, identity_and_single_letters) {
  const PauliWord id(3);
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.x_mask(), 0u);
  EXPECT_EQ(id.z_mask(), 0u);
  EXPECT_EQ(id.phase_exp(), 0u);

  const PauliWord y = PauliWord::y(1, 0);
  EXPECT_TRUE(y.is_hermitian());
  EXPECT_EQ(y.sign(), 1);
  EXPECT_EQ(render(y), "+Y1");
  EXPECT_THROW(PauliWord(0), DimensionError);
  EXPECT_THROW(PauliWord(65), DimensionError);
  EXPECT_THROW(PauliWord::x(2, 2), DimensionError);
  EXPECT_THROW(PauliWord(2, 0b100, 0, 0), DimensionError);
}

TEST(pauli_word, multiplication_examples) {
  const PauliWord x1 = PauliWord::x(2, 0);
  EXPECT_EQ(pauli_mul(x1, x1), PauliWord(2));

  const PauliWord x = PauliWord::x(1, 0);
  const PauliWord z = PauliWord::z(1, 0);
  const PauliWord y = PauliWord::y(1, 0);
  // XZ = -iY and ZX = +iY.
  EXPECT_EQ(pauli_mul(x, z), y.times_i_pow(3));
  EXPECT_EQ(pauli_mul(z, x), y.times_i_pow(1));
  EXPECT_EQ(pauli_mul(x, z), pauli_mul(z, x).negated());
}

TEST(pauli_word, product_of_eq1_factors_matches_dense) {
  const PauliWord a = P("+X1Z2", 2);
  const PauliWord b = P("+Z1X2", 2);
  const PauliWord ab = pauli_mul(a, b);
  EXPECT_TRUE(approx_equal(dense_of_word(ab), dense_of_word(a) * dense_of_word(b),
                           0.0));
  // Frozen from the dense oracle: (X (x) Z)(Z (x) X) = +Y (x) Y.
  EXPECT_EQ(ab, P("+Y1Y2", 2));
}

TEST(pauli_word, commutation_examples) {
  EXPECT_TRUE(commutes(PauliWord::x(2, 0), PauliWord::x(2, 1)));
  EXPECT_FALSE(commutes(PauliWord::x(2, 0), PauliWord::z(2, 0)));
  const PauliWord a = P("+X1Z2", 2);
  const PauliWord b = P("+Z1X2", 2);
  EXPECT_TRUE(commutes(a, b));
  const auto da = dense_of_word(a);
  const auto db = dense_of_word(b);
  EXPECT_TRUE(approx_equal(da * db, db * da, 0.0));
}

TEST(pauli_word, mismatched_widths_are_dimension_errors) {
  EXPECT_THROW(pauli_mul(PauliWord(2), PauliWord(3)), DimensionError);
  EXPECT_THROW(commutes(PauliWord(2), PauliWord(3)), DimensionError);
}

TEST(pauli_word, parse_examples) {
  const PauliWord w = P("+X1Z2", 2);
  EXPECT_EQ(w.x_mask(), 0b01u);
  EXPECT_EQ(w.z_mask(), 0b10u);
  EXPECT_EQ(w.sign(), 1);

  EXPECT_TRUE(P("I", 3).is_identity());
  EXPECT_EQ(P("I", 3).num_qubits(), 3u);

  const PauliWord yy = P("-Y1Y2", 2);
  EXPECT_TRUE(yy.is_hermitian());
  EXPECT_EQ(yy.sign(), -1);
  const PauliWord y1y2 = pauli_mul(PauliWord::y(2, 0), PauliWord::y(2, 1));
  EXPECT_EQ(yy, y1y2.negated());
  EXPECT_TRUE(approx_equal(dense_of_word(yy),
                           Complex(-1) * dense_of_word(y1y2), 0.0));

  EXPECT_EQ(P("  Z2X1  ", 2), P("X1Z2", 2));
  EXPECT_EQ(P("X10", 12).x_mask(), 1u << 9);
}

TEST(pauli_word, parse_errors_report_position) {
  const auto position_of = [](const char *text, unsigned n) -> std::size_t {
    try {
      parse_pauli(text, n);
    } catch (const ParseError &e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 999;
  };
  EXPECT_EQ(position_of("", 2), 0u);
  EXPECT_EQ(position_of("+", 2), 1u);
  EXPECT_EQ(position_of("+Q1", 2), 1u);
  EXPECT_EQ(position_of("X", 2), 1u);
  EXPECT_EQ(position_of("X1X1", 2), 2u);
  EXPECT_EQ(position_of("X1Z3", 2), 3u);
  EXPECT_EQ(position_of("X0", 2), 1u);
  EXPECT_EQ(position_of("IX1", 2), 1u);
  EXPECT_EQ(position_of("x1", 2), 0u);
}

TEST(pauli_word, render_is_canonical) {
  EXPECT_EQ(render(P("-Y1Y2", 2)), "-Y1Y2");
  EXPECT_EQ(render(P("Z2X1", 2)), "+X1Z2");
  EXPECT_EQ(render(PauliWord(2)), "+I");
  EXPECT_EQ(render(PauliWord(2).negated()), "-I");
  EXPECT_EQ(render(PauliWord::x(1, 0).times_i_pow(1)), "+iX1");
  EXPECT_EQ(render_compact(P("+Z1X2", 2)), "Z1X2");
  EXPECT_EQ(render_compact(P("-X2", 2)), "-X2");
}

TEST(pauli_word, property_hermitian_words_square_to_identity) {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned n = 1 + trial % 64;
    const PauliWord a = random_word(rng, n);
    ASSERT_TRUE(a.is_hermitian());
    ASSERT_EQ(pauli_mul(a, a), PauliWord(n)) << render(a);
  }
}

TEST(pauli_word, property_products_commute_or_differ_by_minus_one) {
  Rng rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned n = 1 + trial % 64;
    const PauliWord a = random_word(rng, n, false);
    const PauliWord b = random_word(rng, n, false);
    const PauliWord ab = pauli_mul(a, b);
    const PauliWord ba = pauli_mul(b, a);
    if (commutes(a, b)) {
      ASSERT_EQ(ab, ba);
    } else {
      ASSERT_EQ(ab, ba.negated());
    }
  }
}

TEST(pauli_word, property_render_parse_round_trip) {
  Rng rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned n = 1 + trial % 64;
    const PauliWord w = random_word(rng, n);
    ASSERT_EQ(parse_pauli(render(w), n), w) << render(w);
  }
}

TEST(pauli_word, property_product_matches_dense_oracle_exactly) {
  Rng rng(14);
  for (int trial = 0; trial < 600; ++trial) {
    const unsigned n = 1 + trial % 5;
    const PauliWord a = random_word(rng, n, false);
    const PauliWord b = random_word(rng, n, false);
    ASSERT_TRUE(approx_equal(dense_of_word(pauli_mul(a, b)),
                             dense_of_word(a) * dense_of_word(b), 0.0))
        << render(a) << " * " << render(b);
  }
}

TEST(pauli_word, canonical_order_lists_terms_like_tensor_form) {
  std::vector<PauliWord> words{P("Y1Y2", 2), P("Z1X2", 2), P("I", 2),
                               P("X1Z2", 2)};
  std::sort(words.begin(), words.end(), canonical_less);
  EXPECT_EQ(render(words[0]), "+I");
  EXPECT_EQ(render(words[1]), "+X1Z2");
  EXPECT_EQ(render(words[2]), "+Z1X2");
  EXPECT_EQ(render(words[3]), "+Y1Y2");
}
