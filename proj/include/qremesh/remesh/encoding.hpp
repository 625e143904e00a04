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
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qremesh/core/state_vector.hpp"

namespace qremesh::remesh {

enum class BitOrder { MsbFirst, LsbFirst };
enum class RegisterRole { Axis, Dof };
enum class LayoutMode { Swap, Swapless };

std::string_view to_string(BitOrder o);
std::string_view to_string(LayoutMode m);

/// A contiguous block of wires holding one coordinate.
struct Register {
  RegisterRole role = RegisterRole::Axis;
  int axis = 0;  ///< 0 is the outermost axis (y in 2D, z in 3D); ignored for Dof
  int bits = 1;
  BitOrder order = BitOrder::MsbFirst;
};

/// Label of a single wire: which coordinate and which bit (0 = least significant).
struct WireLabel {
  RegisterRole role = RegisterRole::Axis;
  int axis = 0;
  int bit = 0;
  bool operator==(const WireLabel&) const = default;
};

class UnsupportedLayout : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Where each coordinate bit lives among the wires, in wire order.
class EncodingDescriptor {
 public:
  EncodingDescriptor() = default;
  EncodingDescriptor(int dims, std::vector<Register> registers);

  /// [axis 0, ..., axis dims-1, dof], all most-significant bit first.
  static EncodingDescriptor standard(int dims, std::vector<int> axis_bits, int dof_bits);
  /// Layout that refines without SWAP gates: [axis 0 lsb-first, dof, axis 1
  /// msb-first] in 2D, [dof, axis 0] in 1D. 3D has no such layout.
  static EncodingDescriptor swapless(int dims, std::vector<int> axis_bits, int dof_bits);

  int dims() const { return dims_; }
  const std::vector<Register>& registers() const { return registers_; }
  int num_qubits() const;
  int axis_bits(int axis) const;
  int dof_bits() const;
  std::vector<int> all_axis_bits() const;
  bool is_standard() const;

  /// Per-wire labels in wire order.
  std::vector<WireLabel> labels() const;
  int wire_of(const WireLabel& label) const;
  /// For each wire q of the standard layout with the same bit counts, the
  /// wire of this layout holding the same coordinate bit.
  std::vector<int> standard_wire_map() const;

  /// Same arrangement with extra bits on every axis.
  EncodingDescriptor refined(int levels = 1) const;

  /// Basis index in this layout -> basis index in the standard layout.
  std::uint64_t to_standard_index(std::uint64_t index) const;

 private:
  int dims_ = 0;
  std::vector<Register> registers_;
};

core::StateVector to_standard(const core::StateVector& state, const EncodingDescriptor& enc);
core::StateVector from_standard(const core::StateVector& state, const EncodingDescriptor& enc);

}  // namespace qremesh::remesh
