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

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

namespace qremesh::core {

using Complex = std::complex<double>;

/// The eight single-qubit building blocks of every operator in the library.
///
/// Projectors p+ = |0><0| and p- = |1><1|, ladders s+ = |0><1| and
/// s- = |1><0|, plus the identity and the three Pauli matrices.
enum class Elementary : std::uint8_t {
  Pplus,
  Pminus,
  SigmaPlus,
  SigmaMinus,
  Identity,
  PauliX,
  PauliY,
  PauliZ,
};

inline constexpr std::array<Elementary, 8> kAllElementary = {
    Elementary::Pplus,    Elementary::Pminus, Elementary::SigmaPlus,
    Elementary::SigmaMinus, Elementary::Identity, Elementary::PauliX,
    Elementary::PauliY,   Elementary::PauliZ};

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<Complex, 4>;

Matrix2 matrix_of(Elementary e);

/// Every elementary matrix has at most one nonzero per column:
/// M|b> = weight[b] |b ^ flips>.
struct BitAction {
  bool flips = false;
  std::array<Complex, 2> weight{};
};

BitAction action_of(Elementary e);

/// One-character code used in term strings:
/// '0' p+, '1' p-, '+' s+, '-' s-, 'I', 'X', 'Y', 'Z'.
char symbol(Elementary e);
std::optional<Elementary> from_symbol(char c);
std::string_view name(Elementary e);

Elementary adjoint(Elementary e);
bool is_diagonal(Elementary e);

/// Product a*b expressed as scale * element; nullopt when the product vanishes.
/// The set is closed under multiplication up to a complex scale.
std::optional<std::pair<Complex, Elementary>> multiply(Elementary a, Elementary b);

/// Recognizes a 2x2 matrix as scale * element, if it is one.
std::optional<std::pair<Complex, Elementary>> classify(const Matrix2& m,
                                                       double tol = 1e-15);

}  // namespace qremesh::core
