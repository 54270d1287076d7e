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

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <unsupported/Eigen/KroneckerProduct>

#include "locality_lab/errors.hpp"

namespace locality_lab {

namespace {

using Mat = Eigen::MatrixXcd;

std::size_t dim_of(unsigned n) { return std::size_t{1} << n; }

// Bit of the basis index that holds 0-based qubit q.
std::size_t bit_of(unsigned q, unsigned n) {
  return std::size_t{1} << (n - 1 - q);
}

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat matrix_of(const Matrix2 &u) {
  Mat m(2, 2);
  m << u[0], u[1], u[2], u[3];
  return m;
}

Mat single_qubit_matrix(const Gate &g) {
  const Complex i(0, 1);
  const double r = 1.0 / std::sqrt(2.0);
  Mat m(2, 2);
  switch (g.kind()) {
    case GateKind::X:
      return pauli_x();
    case GateKind::Y:
      m << 0, -i, i, 0;
      return m;
    case GateKind::Z:
      return pauli_z();
    case GateKind::H:
      m << r, r, r, -r;
      return m;
    case GateKind::S:
      m << 1, 0, 0, i;
      return m;
    case GateKind::Sdg:
      m << 1, 0, 0, -i;
      return m;
    case GateKind::Generic1Q:
      return matrix_of(g.matrix());
    default:
      break;
  }
  throw DimensionError("not a single-qubit gate: " + g.text());
}

Mat two_qubit_matrix(GateKind kind) {
  Mat m = Mat::Zero(4, 4);
  if (kind == GateKind::CZ) {
    m.diagonal() << 1, 1, 1, -1;
  } else {
    m(0, 0) = m(1, 1) = 1;
    m(2, 3) = m(3, 2) = 1;
  }
  return m;
}

void check_capacity(unsigned n) {
  const unsigned cap = dense_qubit_cap();
  if (n > cap) {
    throw CapacityError("dense representation of " + std::to_string(n) +
                        " qubits exceeds the cap of " + std::to_string(cap));
  }
}

void check_same_shape(const DenseOperator &a, const DenseOperator &b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("dense operators act on " +
                         std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
  }
}

std::string format_real(double v) {
  if (v == 0) v = 0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

unsigned dense_qubit_cap() {
  unsigned cap = kDenseQubitCap;
  if (const char *env = std::getenv("LOCALITY_LAB_MAX_QUBITS")) {
    unsigned v = 0;
    const char *end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec == std::errc() && ptr == end && v < cap) cap = v;
  }
  return cap;
}

DenseOperator::DenseOperator(unsigned n, Eigen::MatrixXcd m)
    : n_(n), m_(std::move(m)) {
  check_capacity(n);
  const auto d = static_cast<Eigen::Index>(dim_of(n));
  if (m_.rows() != d || m_.cols() != d) {
    throw DimensionError("dense operator on " + std::to_string(n) +
                         " qubits must be " + std::to_string(d) + " square");
  }
}

DenseOperator DenseOperator::identity(unsigned n) {
  check_capacity(n);
  const auto d = static_cast<Eigen::Index>(dim_of(n));
  return {n, Mat::Identity(d, d)};
}

DenseOperator DenseOperator::zero(unsigned n) {
  check_capacity(n);
  const auto d = static_cast<Eigen::Index>(dim_of(n));
  return {n, Mat::Zero(d, d)};
}

DenseOperator operator*(const DenseOperator &a, const DenseOperator &b) {
  check_same_shape(a, b);
  return {a.n_, a.m_ * b.m_};
}

DenseOperator operator+(const DenseOperator &a, const DenseOperator &b) {
  check_same_shape(a, b);
  return {a.n_, a.m_ + b.m_};
}

DenseOperator operator*(Complex s, const DenseOperator &a) {
  return {a.n_, s * a.m_};
}

double max_abs_diff(const DenseOperator &a, const DenseOperator &b) {
  check_same_shape(a, b);
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

bool approx_equal(const DenseOperator &a, const DenseOperator &b, double tol) {
  return a.num_qubits() == b.num_qubits() && max_abs_diff(a, b) <= tol;
}

DenseOperator dense_of_word(const PauliWord &p) {
  const unsigned n = p.num_qubits();
  check_capacity(n);
  const Mat id = Mat::Identity(2, 2);
  Mat acc = Mat::Identity(1, 1);
  for (unsigned q = 0; q < n; ++q) {
    Mat letter = id;
    if ((p.x_mask() >> q) & 1u) letter = letter * pauli_x();
    if ((p.z_mask() >> q) & 1u) letter = letter * pauli_z();
    acc = Eigen::kroneckerProduct(acc, letter).eval();
  }
  static const std::array<Complex, 4> powers{Complex(1, 0), Complex(0, 1),
                                             Complex(-1, 0), Complex(0, -1)};
  return {n, powers[p.phase_exp()] * acc};
}

DenseOperator dense_of_gate(const Gate &g, unsigned n) {
  check_capacity(n);
  if (n == 0 || g.max_target() >= n) {
    throw DimensionError("gate " + g.text() + " does not fit in " +
                         std::to_string(n) + " qubits");
  }
  if (g.arity() == 1) {
    const unsigned q = g.targets()[0];
    const Mat before = Mat::Identity(static_cast<Eigen::Index>(dim_of(q)),
                                     static_cast<Eigen::Index>(dim_of(q)));
    const auto rest = static_cast<Eigen::Index>(dim_of(n - 1 - q));
    const Mat after = Mat::Identity(rest, rest);
    Mat m = Eigen::kroneckerProduct(
        before, Eigen::kroneckerProduct(single_qubit_matrix(g), after).eval());
    return {n, std::move(m)};
  }

  const Mat u = two_qubit_matrix(g.kind());
  const std::size_t ba = bit_of(g.targets()[0], n);
  const std::size_t bb = bit_of(g.targets()[1], n);
  const std::size_t d = dim_of(n);
  Mat m = Mat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t c = 0; c < d; ++c) {
    const std::size_t rest = c & ~(ba | bb);
    const std::size_t cl = ((c & ba) ? 2 : 0) | ((c & bb) ? 1 : 0);
    for (std::size_t rl = 0; rl < 4; ++rl) {
      const std::size_t r = rest | ((rl & 2) ? ba : 0) | ((rl & 1) ? bb : 0);
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          u(static_cast<Eigen::Index>(rl), static_cast<Eigen::Index>(cl));
    }
  }
  return {n, std::move(m)};
}

bool is_unitary(const DenseOperator &u, double tol) {
  const Mat prod = u.matrix() * u.matrix().adjoint();
  return (prod - Mat::Identity(prod.rows(), prod.cols())).cwiseAbs().maxCoeff() <=
         tol;
}

DenseOperator conjugate_dense(const DenseOperator &u, const DenseOperator &a) {
  check_same_shape(u, a);
  if (!is_unitary(u)) {
    throw DomainError("conjugating operator is not unitary within 1e-12");
  }
  return {a.num_qubits(), u.matrix() * a.matrix() * u.matrix().adjoint()};
}

std::string density_defect(const DenseOperator &rho) {
  const Mat &m = rho.matrix();
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) {
    return "not Hermitian";
  }
  if (std::abs(m.trace() - Complex(1, 0)) > kDensityTolerance) {
    return "trace differs from 1";
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) return "eigenvalue solver failed";
  if (solver.eigenvalues().minCoeff() < -kDensityTolerance) {
    return "not positive semidefinite";
  }
  return {};
}

DenseOperator partial_trace(const DenseOperator &a,
                            std::span<const unsigned> keep) {
  const unsigned n = a.num_qubits();
  if (keep.empty()) throw DimensionError("partial trace must keep a qubit");
  if (!std::is_sorted(keep.begin(), keep.end()) ||
      std::adjacent_find(keep.begin(), keep.end()) != keep.end() ||
      keep.back() >= n) {
    throw DimensionError("kept qubits must be ascending, distinct, in range");
  }
  const auto k = static_cast<unsigned>(keep.size());
  std::size_t kept_bits = 0;
  for (unsigned q : keep) kept_bits |= bit_of(q, n);
  const auto reduce = [&](std::size_t idx) {
    std::size_t out = 0;
    for (unsigned j = 0; j < k; ++j) {
      if (idx & bit_of(keep[j], n)) out |= bit_of(j, k);
    }
    return out;
  };

  const std::size_t d = dim_of(n);
  Mat out = Mat::Zero(static_cast<Eigen::Index>(dim_of(k)),
                      static_cast<Eigen::Index>(dim_of(k)));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if ((r & ~kept_bits) != (c & ~kept_bits)) continue;
      out(static_cast<Eigen::Index>(reduce(r)),
          static_cast<Eigen::Index>(reduce(c))) += a(r, c);
    }
  }
  return {k, std::move(out)};
}

std::string ProbabilityTable::label(std::size_t outcome) const {
  std::string s(qubits.size(), '0');
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    if ((outcome >> (qubits.size() - 1 - j)) & 1u) s[j] = '1';
  }
  return s;
}

double ProbabilityTable::total() const {
  double t = 0;
  for (double v : p) t += v;
  return t;
}

ProbabilityTable born_probabilities(const DenseOperator &rho,
                                    std::span<const unsigned> qubits) {
  const unsigned n = rho.num_qubits();
  if (qubits.empty() || qubits.size() > kMaxBornQubits) {
    throw DimensionError("Born table needs 1 to 10 qubits");
  }
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    if (qubits[j] >= n ||
        std::find(qubits.begin(), qubits.begin() + static_cast<long>(j),
                  qubits[j]) != qubits.begin() + static_cast<long>(j)) {
      throw DimensionError("Born qubits must be distinct and in range");
    }
  }
  if (auto defect = density_defect(rho); !defect.empty()) {
    throw DomainError("invalid density matrix: " + defect);
  }
  const auto k = qubits.size();
  ProbabilityTable table{{qubits.begin(), qubits.end()},
                         std::vector<double>(std::size_t{1} << k, 0.0)};
  for (std::size_t idx = 0; idx < rho.dim(); ++idx) {
    std::size_t outcome = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (idx & bit_of(qubits[j], n)) outcome |= std::size_t{1} << (k - 1 - j);
    }
    table.p[outcome] += rho(idx, idx).real();
  }
  return table;
}

std::string dump(const DenseOperator &a) {
  std::string out;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (c) out += ' ';
      const Complex v = a(r, c);
      const double im = v.imag() == 0 ? 0.0 : v.imag();
      out += format_real(v.real());
      out += (std::signbit(im) ? "-" : "+");
      out += format_real(std::abs(im));
      out += 'j';
    }
    out += '\n';
  }
  return out;
}

}  // namespace locality_lab
