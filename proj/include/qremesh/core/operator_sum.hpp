// Copyright 2026 The qremesh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qremesh/core/elementary.hpp"

namespace qremesh::core {

/// Thrown when operands disagree on qubit count.
class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// coefficient * (factors[0] (x) factors[1] (x) ... (x) factors[n-1]).
///
/// Qubit 0 is the leftmost factor and the most significant bit of a basis
/// index, so |y, x, d> reads left to right.
struct TensorTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<Elementary> factors;

  TensorTerm() = default;
  TensorTerm(Complex c, std::vector<Elementary> f)
      : coefficient(c), factors(std::move(f)) {}

  /// Parses a string of symbols, e.g. "00+-I" (see core::symbol).
  static TensorTerm parse(Complex c, std::string_view symbols);
  static TensorTerm identity(int n, Complex c = 1.0);

  int num_qubits() const { return static_cast<int>(factors.size()); }
  std::string label() const;
  TensorTerm adjoint() const;
};

/// Bit masks of a term in basis-index space, used by every matrix-free
/// kernel: term|j> = weight(j) |j ^ flip> with
/// weight(j) = scale * (-1)^popcount(j & sign) * [(j & care) == value].
struct CompiledTerm {
  std::uint64_t flip = 0;
  std::uint64_t care = 0;
  std::uint64_t value = 0;
  std::uint64_t sign = 0;
  Complex scale{1.0, 0.0};
};

CompiledTerm compile(const TensorTerm& term);

/// Bit position (from the least significant end) of qubit q in an n-qubit index.
inline int bit_of(int n, int q) { return n - 1 - q; }

/// Scalar-weighted sum of tensor terms sharing one qubit count.
class OperatorSum {
 public:
  explicit OperatorSum(int n = 0) : n_(n) {}
  OperatorSum(int n, std::vector<TensorTerm> terms);

  int num_qubits() const { return n_; }
  std::span<const TensorTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Set by builders whose output is hermitian by construction; verified
  /// against the dense materialization in tests, not enforced by the type.
  bool hermitian() const { return hermitian_; }
  void set_hermitian(bool h) { hermitian_ = h; }

  void add(TensorTerm t);
  void add(const OperatorSum& other);

  OperatorSum scaled(Complex s) const;
  OperatorSum adjoint() const;

  /// Merges terms with identical factor strings and drops coefficients with
  /// magnitude <= tol. Term order is deterministic (first occurrence).
  OperatorSum simplified(double tol = 0.0) const;

  /// Relabels qubits: factor on qubit q moves to position perm[q].
  OperatorSum permuted(std::span<const int> perm) const;

 private:
  int n_;
  std::vector<TensorTerm> terms_;
  bool hermitian_ = false;
};

OperatorSum operator+(const OperatorSum& a, const OperatorSum& b);
OperatorSum operator-(const OperatorSum& a, const OperatorSum& b);
/// Operator product a*b, term by term.
OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);
/// Kronecker product a (x) b: a occupies the leading qubits.
OperatorSum kron(const OperatorSum& a, const OperatorSum& b);
OperatorSum kron(std::initializer_list<OperatorSum> parts);

/// Identity on n qubits as a one-term sum.
OperatorSum identity_op(int n);
/// e^{(x) n} as a one-term sum.
OperatorSum power_op(Elementary e, int n, Complex c = 1.0);

}  // namespace qremesh::core
