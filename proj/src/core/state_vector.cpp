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

#include "qremesh/core/state_vector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qremesh/core/operator_sum.hpp"

namespace qremesh::core {

StateVector::StateVector(int n) : n_(n) {
  if (n < 0 || n > 30) throw std::length_error("state qubit count out of range: " + std::to_string(n));
  amps_.assign(std::size_t{1} << n, Complex{});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n, std::vector<Complex> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
  if (n < 0 || n > 30 || amps_.size() != (std::size_t{1} << n)) {
    throw LengthMismatch("amplitude count does not match 2^" + std::to_string(n));
  }
}

StateVector StateVector::basis(int n, std::uint64_t index) {
  StateVector s(n);
  if (index >= s.dimension()) throw std::out_of_range("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_real(std::span<const double> values) {
  const std::size_t dim = values.size();
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw LengthMismatch("vector length " + std::to_string(dim) + " is not a power of two");
  }
  std::vector<Complex> a(values.begin(), values.end());
  return StateVector(std::countr_zero(dim), std::move(a));
}

StateVector StateVector::random(int n, std::mt19937_64& rng, bool real_only) {
  std::normal_distribution<double> g(0.0, 1.0);
  StateVector s(n);
  for (auto& a : s.amps_) a = Complex(g(rng), real_only ? 0.0 : g(rng));
  s.normalize();
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

StateVector& StateVector::normalize() {
  const double nrm = norm();
  if (!(nrm > 0.0)) throw std::domain_error("cannot normalize the zero vector");
  for (auto& a : amps_) a /= nrm;
  return *this;
}

StateVector StateVector::normalized() const {
  StateVector s = *this;
  s.normalize();
  return s;
}

bool StateVector::is_normalized(double tol) const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::abs(acc - 1.0) <= tol;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

std::vector<double> StateVector::real_part() const {
  std::vector<double> r(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) r[i] = amps_[i].real();
  return r;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw LengthMismatch("inner product of states of different size");
  Complex acc{};
  for (std::size_t i = 0; i < a.dimension(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

}  // namespace qremesh::core
