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

#include "qremesh/remesh/encoding.hpp"

#include <string>

#include "qremesh/core/operator_sum.hpp"

namespace qremesh::remesh {

std::string_view to_string(BitOrder o) { return o == BitOrder::MsbFirst ? "msb_first" : "lsb_first"; }
std::string_view to_string(LayoutMode m) { return m == LayoutMode::Swap ? "swap" : "swapless"; }

EncodingDescriptor::EncodingDescriptor(int dims, std::vector<Register> registers)
    : dims_(dims), registers_(std::move(registers)) {
  if (dims_ < 1 || dims_ > 3) throw UnsupportedLayout("dims must be 1, 2 or 3");
  std::vector<int> seen(static_cast<std::size_t>(dims_), 0);
  int dof_regs = 0;
  for (const auto& r : registers_) {
    if (r.bits < 1) throw UnsupportedLayout("every register needs at least one bit");
    if (r.role == RegisterRole::Dof) {
      ++dof_regs;
      continue;
    }
    if (r.axis < 0 || r.axis >= dims_) throw UnsupportedLayout("register axis out of range");
    ++seen[static_cast<std::size_t>(r.axis)];
  }
  for (int s : seen) {
    if (s != 1) throw UnsupportedLayout("each axis needs exactly one register");
  }
  if (dof_regs > 1) throw UnsupportedLayout("at most one DoF register");
}

EncodingDescriptor EncodingDescriptor::standard(int dims, std::vector<int> axis_bits, int dof_bits) {
  if (static_cast<int>(axis_bits.size()) != dims) throw UnsupportedLayout("one bit count per axis required");
  std::vector<Register> regs;
  for (int a = 0; a < dims; ++a) regs.push_back({RegisterRole::Axis, a, axis_bits[static_cast<std::size_t>(a)]});
  if (dof_bits > 0) regs.push_back({RegisterRole::Dof, 0, dof_bits});
  return {dims, std::move(regs)};
}

EncodingDescriptor EncodingDescriptor::swapless(int dims, std::vector<int> axis_bits, int dof_bits) {
  if (static_cast<int>(axis_bits.size()) != dims) throw UnsupportedLayout("one bit count per axis required");
  std::vector<Register> regs;
  if (dims == 1) {
    if (dof_bits > 0) regs.push_back({RegisterRole::Dof, 0, dof_bits});
    regs.push_back({RegisterRole::Axis, 0, axis_bits[0]});
  } else if (dims == 2) {
    regs.push_back({RegisterRole::Axis, 0, axis_bits[0], BitOrder::LsbFirst});
    if (dof_bits > 0) regs.push_back({RegisterRole::Dof, 0, dof_bits});
    regs.push_back({RegisterRole::Axis, 1, axis_bits[1]});
  } else {
    throw UnsupportedLayout("swapless refinement is not possible in 3D: only two register ends are available");
  }
  return {dims, std::move(regs)};
}

int EncodingDescriptor::num_qubits() const {
  int n = 0;
  for (const auto& r : registers_) n += r.bits;
  return n;
}

int EncodingDescriptor::axis_bits(int axis) const {
  for (const auto& r : registers_) {
    if (r.role == RegisterRole::Axis && r.axis == axis) return r.bits;
  }
  throw UnsupportedLayout("no register for axis " + std::to_string(axis));
}

int EncodingDescriptor::dof_bits() const {
  for (const auto& r : registers_) {
    if (r.role == RegisterRole::Dof) return r.bits;
  }
  return 0;
}

std::vector<int> EncodingDescriptor::all_axis_bits() const {
  std::vector<int> b;
  for (int a = 0; a < dims_; ++a) b.push_back(axis_bits(a));
  return b;
}

bool EncodingDescriptor::is_standard() const {
  return labels() == standard(dims_, all_axis_bits(), dof_bits()).labels();
}

std::vector<WireLabel> EncodingDescriptor::labels() const {
  std::vector<WireLabel> out;
  for (const auto& r : registers_) {
    for (int w = 0; w < r.bits; ++w) {
      const int bit = r.order == BitOrder::MsbFirst ? r.bits - 1 - w : w;
      out.push_back({r.role, r.role == RegisterRole::Dof ? 0 : r.axis, bit});
    }
  }
  return out;
}

int EncodingDescriptor::wire_of(const WireLabel& label) const {
  const auto l = labels();
  for (std::size_t q = 0; q < l.size(); ++q) {
    if (l[q] == label) return static_cast<int>(q);
  }
  throw UnsupportedLayout("wire label not present in the layout");
}

std::vector<int> EncodingDescriptor::standard_wire_map() const {
  const auto std_labels = standard(dims_, all_axis_bits(), dof_bits()).labels();
  std::vector<int> map;
  map.reserve(std_labels.size());
  for (const auto& l : std_labels) map.push_back(wire_of(l));
  return map;
}

EncodingDescriptor EncodingDescriptor::refined(int levels) const {
  std::vector<Register> regs = registers_;
  for (auto& r : regs) {
    if (r.role == RegisterRole::Axis) r.bits += levels;
  }
  return {dims_, std::move(regs)};
}

std::uint64_t EncodingDescriptor::to_standard_index(std::uint64_t index) const {
  const int n = num_qubits();
  const auto map = standard_wire_map();
  std::uint64_t out = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = (index >> core::bit_of(n, map[static_cast<std::size_t>(q)])) & 1U;
    out |= bit << core::bit_of(n, q);
  }
  return out;
}

core::StateVector to_standard(const core::StateVector& state, const EncodingDescriptor& enc) {
  if (state.num_qubits() != enc.num_qubits()) throw core::LengthMismatch("state does not match the encoding");
  std::vector<core::Complex> out(state.dimension());
  for (std::uint64_t i = 0; i < state.dimension(); ++i) out[enc.to_standard_index(i)] = state[i];
  return core::StateVector(state.num_qubits(), std::move(out));
}

core::StateVector from_standard(const core::StateVector& state, const EncodingDescriptor& enc) {
  if (state.num_qubits() != enc.num_qubits()) throw core::LengthMismatch("state does not match the encoding");
  std::vector<core::Complex> out(state.dimension());
  for (std::uint64_t i = 0; i < state.dimension(); ++i) out[i] = state[enc.to_standard_index(i)];
  return core::StateVector(state.num_qubits(), std::move(out));
}

}  // namespace qremesh::remesh
