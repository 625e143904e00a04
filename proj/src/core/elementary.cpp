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

#include "qremesh/core/elementary.hpp"

#include <cmath>

namespace qremesh::core {

namespace {
constexpr Complex kI{0.0, 1.0};
}  // namespace

Matrix2 matrix_of(Elementary e) {
  switch (e) {
    case Elementary::Pplus:
      return {1.0, 0.0, 0.0, 0.0};
    case Elementary::Pminus:
      return {0.0, 0.0, 0.0, 1.0};
    case Elementary::SigmaPlus:
      return {0.0, 1.0, 0.0, 0.0};
    case Elementary::SigmaMinus:
      return {0.0, 0.0, 1.0, 0.0};
    case Elementary::Identity:
      return {1.0, 0.0, 0.0, 1.0};
    case Elementary::PauliX:
      return {0.0, 1.0, 1.0, 0.0};
    case Elementary::PauliY:
      return {0.0, -kI, kI, 0.0};
    case Elementary::PauliZ:
      return {1.0, 0.0, 0.0, -1.0};
  }
  return {};
}

BitAction action_of(Elementary e) {
  // Column b of the matrix holds the image of |b>.
  const Matrix2 m = matrix_of(e);
  BitAction a;
  a.flips = !is_diagonal(e);
  if (a.flips) {
    a.weight = {m[2], m[1]};
  } else {
    a.weight = {m[0], m[3]};
  }
  return a;
}

char symbol(Elementary e) {
  switch (e) {
    case Elementary::Pplus:
      return '0';
    case Elementary::Pminus:
      return '1';
    case Elementary::SigmaPlus:
      return '+';
    case Elementary::SigmaMinus:
      return '-';
    case Elementary::Identity:
      return 'I';
    case Elementary::PauliX:
      return 'X';
    case Elementary::PauliY:
      return 'Y';
    case Elementary::PauliZ:
      return 'Z';
  }
  return '?';
}

std::optional<Elementary> from_symbol(char c) {
  for (Elementary e : kAllElementary) {
    if (symbol(e) == c) return e;
  }
  return std::nullopt;
}

std::string_view name(Elementary e) {
  switch (e) {
    case Elementary::Pplus:
      return "p+";
    case Elementary::Pminus:
      return "p-";
    case Elementary::SigmaPlus:
      return "s+";
    case Elementary::SigmaMinus:
      return "s-";
    case Elementary::Identity:
      return "I";
    case Elementary::PauliX:
      return "X";
    case Elementary::PauliY:
      return "Y";
    case Elementary::PauliZ:
      return "Z";
  }
  return "?";
}

Elementary adjoint(Elementary e) {
  if (e == Elementary::SigmaPlus) return Elementary::SigmaMinus;
  if (e == Elementary::SigmaMinus) return Elementary::SigmaPlus;
  return e;
}

bool is_diagonal(Elementary e) {
  switch (e) {
    case Elementary::Pplus:
    case Elementary::Pminus:
    case Elementary::Identity:
    case Elementary::PauliZ:
      return true;
    default:
      return false;
  }
}

std::optional<std::pair<Complex, Elementary>> classify(const Matrix2& m, double tol) {
  for (Elementary e : kAllElementary) {
    const Matrix2 ref = matrix_of(e);
    // Pick the scale from the first nonzero reference entry, then verify.
    Complex scale{};
    bool found = false;
    for (int k = 0; k < 4; ++k) {
      if (std::abs(ref[k]) > 0.5) {
        scale = m[k] / ref[k];
        found = true;
        break;
      }
    }
    if (!found || std::abs(scale) <= tol) continue;
    bool match = true;
    for (int k = 0; k < 4 && match; ++k) {
      match = std::abs(m[k] - scale * ref[k]) <= tol;
    }
    if (match) return std::make_pair(scale, e);
  }
  return std::nullopt;
}

std::optional<std::pair<Complex, Elementary>> multiply(Elementary a, Elementary b) {
  const Matrix2 x = matrix_of(a);
  const Matrix2 y = matrix_of(b);
  const Matrix2 p = {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                     x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  return classify(p);
}

}  // namespace qremesh::core
