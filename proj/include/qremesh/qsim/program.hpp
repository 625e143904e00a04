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

#include <stdexcept>
#include <string>
#include <vector>

#include "qremesh/core/dense.hpp"
#include "qremesh/core/operator_sum.hpp"
#include "qremesh/core/state_vector.hpp"

namespace qremesh::qsim {

/// N = (1/sqrt 2) [[-1, -i], [i, 1]] rotates Y onto -Z; it is hermitian and
/// its own inverse.
enum class GateKind { H, X, Y, Z, RY, CNOT, SWAP, N };

std::string_view to_string(GateKind k);

class BadTarget : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct Gate {
  GateKind kind = GateKind::H;
  int target = 0;
  int control = -1;  ///< CNOT control, or the second wire of SWAP
  double theta = 0.0;

  bool two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::SWAP; }
  Gate inverse() const;
};

class GateProgram {
 public:
  explicit GateProgram(int n = 0) : n_(n) {}

  int num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  GateProgram& add(Gate g);
  GateProgram& h(int q) { return add({GateKind::H, q}); }
  GateProgram& x(int q) { return add({GateKind::X, q}); }
  GateProgram& y(int q) { return add({GateKind::Y, q}); }
  GateProgram& z(int q) { return add({GateKind::Z, q}); }
  GateProgram& n(int q) { return add({GateKind::N, q}); }
  GateProgram& ry(int q, double theta) { return add({GateKind::RY, q, -1, theta}); }
  GateProgram& cnot(int control, int target) { return add({GateKind::CNOT, target, control}); }
  GateProgram& swap(int a, int b) { return add({GateKind::SWAP, a, b}); }
  GateProgram& append(const GateProgram& other);

  /// Reversed program of inverted gates.
  GateProgram inverse() const;

  std::size_t count(GateKind k) const;

 private:
  int n_;
  std::vector<Gate> gates_;
};

void apply_gate(core::StateVector& state, const Gate& g);
void apply_program_inplace(core::StateVector& state, const GateProgram& program);
core::StateVector apply_program(core::StateVector state, const GateProgram& program);

/// Gate as an operator sum of elementary strings, e.g. CNOT = p+ I + p- X.
core::OperatorSum gate_operator(const Gate& g, int n);

/// Dense unitary of a program (last gate leftmost), built from gate_operator
/// materializations. Verification oracle, capped like materialize_sum.
core::DenseMatrix materialize_program(const GateProgram& program);

/// X on every y wire, H on every x wire, X on the DoF wire: the uniform
/// top-edge vertical load on |y, x, d>.
GateProgram force_program(int nx, int ny);
core::StateVector prepare_force_state(int nx, int ny);

}  // namespace qremesh::qsim
