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
#include <random>
#include <span>
#include <vector>

#include "qremesh/core/elementary.hpp"

namespace qremesh::core {

/// 2^n complex amplitudes; basis index bit (n-1-q) belongs to qubit q.
class StateVector {
 public:
  StateVector() = default;
  /// |0...0> on n qubits.
  explicit StateVector(int n);
  StateVector(int n, std::vector<Complex> amplitudes);

  static StateVector basis(int n, std::uint64_t index);
  /// Real amplitudes, e.g. a displacement vector; not normalized.
  static StateVector from_real(std::span<const double> values);
  /// Haar-like random state (normalized), deterministic in the generator.
  static StateVector random(int n, std::mt19937_64& rng, bool real_only = false);

  int num_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }

  std::span<Complex> amplitudes() { return amps_; }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex& operator[](std::size_t i) { return amps_[i]; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  /// Scales to unit norm; throws std::domain_error on the zero vector.
  StateVector& normalize();
  StateVector normalized() const;
  bool is_normalized(double tol = 1e-10) const;

  std::vector<double> probabilities() const;
  std::vector<double> real_part() const;

 private:
  int n_ = 0;
  std::vector<Complex> amps_;
};

/// <a|b>.
Complex inner(const StateVector& a, const StateVector& b);

}  // namespace qremesh::core
