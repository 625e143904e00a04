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

#include "qremesh/qsim/program.hpp"

#include <cmath>
#include <numbers>

namespace qremesh::qsim {

using core::Complex;
using core::Elementary;
using core::OperatorSum;
using core::TensorTerm;

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void check_gate(const Gate& g, int n) {
  if (g.target < 0 || g.target >= n) {
    throw BadTarget(std::string(to_string(g.kind)) + " target " + std::to_string(g.target) + " outside [0, " +
                    std::to_string(n) + ")");
  }
  if (g.two_qubit()) {
    if (g.control < 0 || g.control >= n) throw BadTarget("second wire " + std::to_string(g.control) + " out of range");
    if (g.control == g.target) throw BadTarget("two-qubit gate needs distinct wires");
  }
}

// 2x2 matrix (row-major) of a single-qubit gate.
std::array<Complex, 4> single_matrix(const Gate& g) {
  const Complex i{0.0, 1.0};
  switch (g.kind) {
    case GateKind::H:
      return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y:
      return {0.0, -i, i, 0.0};
    case GateKind::Z:
      return {1.0, 0.0, 0.0, -1.0};
    case GateKind::N:
      return {-kInvSqrt2, -i * kInvSqrt2, i * kInvSqrt2, kInvSqrt2};
    case GateKind::RY: {
      const double c = std::cos(g.theta / 2.0);
      const double s = std::sin(g.theta / 2.0);
      return {c, -s, s, c};
    }
    default:
      break;
  }
  throw std::logic_error("not a single-qubit gate");
}

}  // namespace

std::string_view to_string(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "H";
    case GateKind::X:
      return "X";
    case GateKind::Y:
      return "Y";
    case GateKind::Z:
      return "Z";
    case GateKind::RY:
      return "RY";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::SWAP:
      return "SWAP";
    case GateKind::N:
      return "N";
  }
  return "?";
}

Gate Gate::inverse() const {
  Gate g = *this;
  if (kind == GateKind::RY) g.theta = -theta;
  return g;
}

GateProgram& GateProgram::add(Gate g) {
  check_gate(g, n_);
  gates_.push_back(g);
  return *this;
}

GateProgram& GateProgram::append(const GateProgram& other) {
  if (other.n_ != n_) throw core::LengthMismatch("appending a program of different width");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

GateProgram GateProgram::inverse() const {
  GateProgram out(n_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(it->inverse());
  return out;
}

std::size_t GateProgram::count(GateKind k) const {
  std::size_t c = 0;
  for (const auto& g : gates_) c += g.kind == k ? 1 : 0;
  return c;
}

void apply_gate(core::StateVector& state, const Gate& g) {
  const int n = state.num_qubits();
  check_gate(g, n);
  auto a = state.amplitudes();
  const std::size_t dim = state.dimension();
  const std::size_t tbit = std::size_t{1} << core::bit_of(n, g.target);

  if (g.kind == GateKind::CNOT) {
    const std::size_t cbit = std::size_t{1} << core::bit_of(n, g.control);
    for (std::size_t j = 0; j < dim; ++j) {
      if ((j & cbit) && !(j & tbit)) std::swap(a[j], a[j | tbit]);
    }
    return;
  }
  if (g.kind == GateKind::SWAP) {
    const std::size_t obit = std::size_t{1} << core::bit_of(n, g.control);
    for (std::size_t j = 0; j < dim; ++j) {
      if ((j & tbit) && !(j & obit)) std::swap(a[j], a[(j ^ tbit) | obit]);
    }
    return;
  }
  const auto m = single_matrix(g);
  for (std::size_t j = 0; j < dim; ++j) {
    if (j & tbit) continue;
    const Complex lo = a[j];
    const Complex hi = a[j | tbit];
    a[j] = m[0] * lo + m[1] * hi;
    a[j | tbit] = m[2] * lo + m[3] * hi;
  }
}

void apply_program_inplace(core::StateVector& state, const GateProgram& program) {
  if (state.num_qubits() != program.num_qubits()) throw core::LengthMismatch("program and state widths differ");
  for (const auto& g : program.gates()) apply_gate(state, g);
}

core::StateVector apply_program(core::StateVector state, const GateProgram& program) {
  apply_program_inplace(state, program);
  return state;
}

OperatorSum gate_operator(const Gate& g, int n) {
  check_gate(g, n);
  auto on = [n](std::initializer_list<std::pair<int, Elementary>> placed, Complex c) {
    TensorTerm t = TensorTerm::identity(n, c);
    for (const auto& [q, e] : placed) t.factors[static_cast<std::size_t>(q)] = e;
    return t;
  };
  OperatorSum op(n);
  const Complex i{0.0, 1.0};
  const int q = g.target;
  switch (g.kind) {
    case GateKind::H:
      op.add(on({{q, Elementary::PauliX}}, kInvSqrt2));
      op.add(on({{q, Elementary::PauliZ}}, kInvSqrt2));
      break;
    case GateKind::X:
      op.add(on({{q, Elementary::PauliX}}, 1.0));
      break;
    case GateKind::Y:
      op.add(on({{q, Elementary::PauliY}}, 1.0));
      break;
    case GateKind::Z:
      op.add(on({{q, Elementary::PauliZ}}, 1.0));
      break;
    case GateKind::N:
      op.add(on({{q, Elementary::PauliZ}}, -kInvSqrt2));
      op.add(on({{q, Elementary::PauliY}}, kInvSqrt2));
      break;
    case GateKind::RY:
      op.add(on({}, std::cos(g.theta / 2.0)));
      op.add(on({{q, Elementary::PauliY}}, -i * std::sin(g.theta / 2.0)));
      break;
    case GateKind::CNOT:
      op.add(on({{g.control, Elementary::Pplus}}, 1.0));
      op.add(on({{g.control, Elementary::Pminus}, {q, Elementary::PauliX}}, 1.0));
      break;
    case GateKind::SWAP:
      op.add(on({}, 0.5));
      op.add(on({{q, Elementary::PauliX}, {g.control, Elementary::PauliX}}, 0.5));
      op.add(on({{q, Elementary::PauliY}, {g.control, Elementary::PauliY}}, 0.5));
      op.add(on({{q, Elementary::PauliZ}, {g.control, Elementary::PauliZ}}, 0.5));
      break;
  }
  return op;
}

core::DenseMatrix materialize_program(const GateProgram& program) {
  const int n = program.num_qubits();
  if (n > core::kDenseQubitCap) throw core::DimensionOverflow("program too wide for dense materialization");
  const Eigen::Index dim = Eigen::Index{1} << n;
  core::DenseMatrix u = core::DenseMatrix::Identity(dim, dim);
  for (const auto& g : program.gates()) u = core::materialize_sum(gate_operator(g, n)) * u;
  return u;
}

GateProgram force_program(int nx, int ny) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("force state needs nx, ny >= 1");
  GateProgram p(nx + ny + 1);
  for (int q = 0; q < ny; ++q) p.x(q);
  for (int q = ny; q < ny + nx; ++q) p.h(q);
  p.x(nx + ny);
  return p;
}

core::StateVector prepare_force_state(int nx, int ny) {
  return apply_program(core::StateVector(nx + ny + 1), force_program(nx, ny));
}

}  // namespace qremesh::qsim
