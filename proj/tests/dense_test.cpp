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

#include "locality_lab/dense.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

#include "locality_lab/dense_state.hpp"
#include "locality_lab/errors.hpp"
#include "test_support.hpp"

using namespace locality_lab;
using namespace locality_lab::testing;

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXcd mat2(Complex a, Complex b, Complex c, Complex d) {
  Eigen::MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}

const Eigen::MatrixXcd kI = mat2(1, 0, 0, 1);
const Eigen::MatrixXcd kX = mat2(0, 1, 1, 0);
const Eigen::MatrixXcd kY = mat2(0, Complex(0, -1), Complex(0, 1), 0);
const Eigen::MatrixXcd kZ = mat2(1, 0, 0, -1);

ProductState rho(const char *factors) { return ProductState::parse(factors, 2); }

DenseOperator bell_projector() {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return {2, m};
}

}  // namespace

TEST(dense, word_is_kronecker_product) {
  EXPECT_TRUE(approx_equal(dense_of_word(PauliWord::x(2, 0)),
                           DenseOperator(2, kron(kX, kI)), 0.0));
  EXPECT_TRUE(approx_equal(dense_of_word(PauliWord(1)), DenseOperator(1, kI), 0.0));
  EXPECT_TRUE(approx_equal(dense_of_word(parse_pauli("-Y1Y2", 2)),
                           DenseOperator(2, -kron(kY, kY)), 0.0));
  EXPECT_TRUE(approx_equal(dense_of_word(parse_pauli("X1Z2", 2)),
                           DenseOperator(2, kron(kX, kZ)), 0.0));
  // An odd number of Y letters pins the sign convention.
  EXPECT_TRUE(approx_equal(dense_of_word(parse_pauli("+Y1", 1)), DenseOperator(1, kY), 0.0));
  EXPECT_TRUE(approx_equal(dense_of_word(PauliWord::y(1, 0)), DenseOperator(1, kY), 0.0));
  EXPECT_TRUE(approx_equal(dense_of_word(parse_pauli("-X1Y2Z3", 3)),
                           DenseOperator(3, -kron(kX, kron(kY, kZ))), 0.0));
}

TEST(dense, product_state_examples) {
  Eigen::MatrixXcd plus = 0.5 * (kI + kX);
  EXPECT_TRUE(approx_equal(dense_of_product_state(rho("+X1 ; +X2")),
                           DenseOperator(2, kron(plus, plus))));
  EXPECT_TRUE(approx_equal(dense_of_product_state(rho("+X1X2 ; +Z1Z2")),
                           bell_projector()));
  Eigen::MatrixXcd zero = 0.5 * (kI + kZ);
  EXPECT_TRUE(approx_equal(dense_of_product_state(rho("+Z1")),
                           DenseOperator(2, kron(zero, 0.5 * kI))));
}

TEST(dense, gate_examples) {
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(4, 4);
  diag.diagonal() << 1, 1, 1, -1;
  const auto cz = dense_of_gate(Gate::pair(GateKind::CZ, 0, 1), 2);
  EXPECT_TRUE(approx_equal(cz, DenseOperator(2, diag), 0.0));
  EXPECT_TRUE(approx_equal(dense_of_gate(Gate::single(GateKind::Z, 0), 1),
                           DenseOperator(1, kZ), 0.0));

  // (I + Z1 + Z2 - Z1Z2) / 2
  const DenseOperator decomposition =
      Complex(0.5) * (DenseOperator::identity(2) + dense_of_word(PauliWord::z(2, 0)) +
                      dense_of_word(PauliWord::z(2, 1)) +
                      Complex(-1) * dense_of_word(parse_pauli("Z1Z2", 2)));
  EXPECT_TRUE(approx_equal(cz, decomposition, 0.0));
}

TEST(dense, two_qubit_gates_embed_on_any_pair) {
  // CNOT with control 3 and target 1 on three qubits, built by hand.
  const auto u = dense_of_gate(Gate::pair(GateKind::CNOT, 2, 0), 3);
  const Eigen::MatrixXcd p0 = 0.5 * (kI + kZ);
  const Eigen::MatrixXcd p1 = 0.5 * (kI - kZ);
  const Eigen::MatrixXcd expected = kron(kI, kron(kI, p0)) + kron(kX, kron(kI, p1));
  EXPECT_TRUE(approx_equal(u, DenseOperator(3, expected), 0.0));
}

TEST(dense, conjugation_examples) {
  const auto cz = dense_of_gate(Gate::pair(GateKind::CZ, 0, 1), 2);
  const auto rho0 = dense_of_product_state(rho("+X1 ; +X2"));
  const auto rho1 = dense_of_product_state(rho("+X1Z2 ; +Z1X2"));
  const auto rho2a = dense_of_product_state(rho("-X1Z2 ; +Z1X2"));
  EXPECT_TRUE(approx_equal(conjugate_dense(cz, rho0), rho1));
  EXPECT_TRUE(approx_equal(conjugate_dense(DenseOperator::identity(2), rho1), rho1));
  EXPECT_TRUE(approx_equal(conjugate_dense(dense_of_word(PauliWord::z(2, 0)), rho1),
                           rho2a));
}

TEST(dense, conjugation_rejects_non_unitary) {
  EXPECT_THROW(conjugate_dense(Complex(2) * DenseOperator::identity(1),
                               DenseOperator::identity(1)),
               DomainError);
}

TEST(dense, partial_trace_examples) {
  const std::vector<unsigned> first{0};
  const std::vector<unsigned> second{1};
  const DenseOperator half_identity(1, 0.5 * kI);
  EXPECT_TRUE(approx_equal(partial_trace(bell_projector(), first), half_identity));
  EXPECT_TRUE(approx_equal(
      partial_trace(Complex(0.25) * DenseOperator::identity(2), first),
      half_identity));
  EXPECT_TRUE(approx_equal(
      partial_trace(dense_of_product_state(rho("+X1Z2 ; +Z1X2")), second),
      half_identity));
  EXPECT_THROW(partial_trace(bell_projector(), std::vector<unsigned>{}),
               DimensionError);
}

TEST(dense, partial_trace_keeps_the_right_factor) {
  const Eigen::MatrixXcd a = 0.5 * (kI + kX);
  const Eigen::MatrixXcd b = 0.5 * (kI + kZ);
  const Eigen::MatrixXcd c = 0.5 * (kI + kY);
  const DenseOperator abc(3, kron(a, kron(b, c)));
  EXPECT_TRUE(approx_equal(partial_trace(abc, std::vector<unsigned>{1}),
                           DenseOperator(1, b)));
  EXPECT_TRUE(approx_equal(partial_trace(abc, std::vector<unsigned>{0, 2}),
                           DenseOperator(2, kron(a, c))));
}

TEST(dense, property_partial_trace_preserves_trace_and_composes) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 2 + trial % 3;
    const auto r = dense_of_product_state(random_product_state(rng, n));
    std::vector<unsigned> keep;
    for (unsigned q = 0; q < n; ++q) {
      if (q != 0 && q != n - 1) keep.push_back(q);
    }
    // Remove qubit 0 then the last one, or the other way round.
    std::vector<unsigned> drop_first(n - 1);
    for (unsigned q = 1; q < n; ++q) drop_first[q - 1] = q;
    std::vector<unsigned> drop_last(n - 1);
    for (unsigned q = 0; q + 1 < n; ++q) drop_last[q] = q;
    const auto a = partial_trace(r, drop_first);
    const auto b = partial_trace(r, drop_last);
    ASSERT_NEAR(std::abs(a.trace() - r.trace()), 0, 1e-12);
    if (keep.empty()) continue;
    std::vector<unsigned> inner_a(n - 2);
    for (unsigned q = 0; q + 1 < n - 1; ++q) inner_a[q] = q;
    std::vector<unsigned> inner_b(n - 2);
    for (unsigned q = 1; q < n - 1; ++q) inner_b[q - 1] = q;
    ASSERT_TRUE(approx_equal(partial_trace(a, inner_a), partial_trace(b, inner_b)));
    ASSERT_TRUE(approx_equal(partial_trace(r, keep), partial_trace(a, inner_a)));
  }
}

TEST(dense, born_examples) {
  const std::vector<unsigned> both{0, 1};
  const auto bell = born_probabilities(bell_projector(), both);
  EXPECT_EQ(bell.label(0), "00");
  EXPECT_EQ(bell.label(2), "10");
  EXPECT_NEAR(bell.p[0], 0.5, 1e-12);
  EXPECT_NEAR(bell.p[1], 0.0, 1e-12);
  EXPECT_NEAR(bell.p[2], 0.0, 1e-12);
  EXPECT_NEAR(bell.p[3], 0.5, 1e-12);

  const auto plus = born_probabilities(dense_of_product_state(rho("+X1 ; +X2")),
                                       std::vector<unsigned>{0});
  ASSERT_EQ(plus.p.size(), 2u);
  EXPECT_NEAR(plus.p[0], 0.5, 1e-12);
  EXPECT_NEAR(plus.p[1], 0.5, 1e-12);

  const auto rho2a =
      born_probabilities(dense_of_product_state(rho("-X1Z2 ; +Z1X2")), both);
  for (double p : rho2a.p) EXPECT_NEAR(p, 0.25, 1e-12);
}

TEST(dense, born_orders_outcomes_by_listed_qubits) {
  // |0><0| (x) |1><1|: listed as (2, 1) the outcome string is "10".
  const auto r = dense_of_product_state(rho("+Z1 ; -Z2"));
  const auto t = born_probabilities(r, std::vector<unsigned>{1, 0});
  EXPECT_NEAR(t.p[0b10], 1.0, 1e-12);
  EXPECT_EQ(t.label(0b10), "10");
}

TEST(dense, born_rejects_invalid_density) {
  EXPECT_THROW(born_probabilities(DenseOperator::identity(1),
                                  std::vector<unsigned>{0}),
               DomainError);
  EXPECT_THROW(born_probabilities(dense_of_word(PauliWord::z(1, 0)),
                                  std::vector<unsigned>{0}),
               DomainError);
  EXPECT_FALSE(density_defect(dense_of_product_state(rho("+X1 ; +Z2"))).size());
}

TEST(dense, capacity_cap_and_environment_override) {
  EXPECT_EQ(dense_qubit_cap(), kDenseQubitCap);
  EXPECT_THROW(dense_of_word(PauliWord(13)), CapacityError);
  ::setenv("LOCALITY_LAB_MAX_QUBITS", "3", 1);
  EXPECT_EQ(dense_qubit_cap(), 3u);
  EXPECT_THROW(dense_of_word(PauliWord(4)), CapacityError);
  ::setenv("LOCALITY_LAB_MAX_QUBITS", "40", 1);
  EXPECT_EQ(dense_qubit_cap(), kDenseQubitCap);
  ::unsetenv("LOCALITY_LAB_MAX_QUBITS");
}

TEST(dense, property_tensor_sum_matches_product) {
  Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + trial % 5;
    const ProductState s = random_product_state(rng, n);
    ASSERT_TRUE(approx_equal(dense_of_pauli_sum(n, expand_to_pauli_sum(s)),
                             dense_of_product_state(s)));
  }
}

TEST(dense, dump_format) {
  EXPECT_EQ(dump(dense_of_word(PauliWord::y(1, 0))), "0+0j 0-1j\n0+1j 0+0j\n");
  EXPECT_EQ(dump(Complex(0.5) * DenseOperator::identity(1)),
            "0.5+0j 0+0j\n0+0j 0.5+0j\n");
}
