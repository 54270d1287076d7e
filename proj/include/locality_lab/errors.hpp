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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locality_lab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit count, or a qubit index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Text input did not match the expected grammar. `position()` is a
/// 0-based character offset for single-line inputs and a 1-based line
/// number for multi-line inputs (see `is_line()`).
class ParseError : public Error {
 public:
  ParseError(const std::string &msg, std::size_t position, bool is_line = false)
      : Error(msg), position_(position), is_line_(is_line) {}

  std::size_t position() const { return position_; }
  bool is_line() const { return is_line_; }

 private:
  std::size_t position_;
  bool is_line_;
};

/// The requested operation is not defined for this representation, e.g.
/// Pauli conjugation by a non-Clifford gate.
class UnsupportedRepresentation : public Error {
 public:
  using Error::Error;
};

/// A factor list contains an anticommuting pair or a +-identity factor.
class InvalidFactorization : public Error {
 public:
  using Error::Error;
};

/// A factor list is not independent: some sub-product equals +-identity.
class RankError : public Error {
 public:
  using Error::Error;
};

/// A dense representation was requested beyond the configured qubit cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation
/// (non-unitary gate, non-Hermitian observable, invalid density matrix).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two states cannot be compared position by position.
class IncomparableError : public Error {
 public:
  using Error::Error;
};

}  // namespace locality_lab
