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

#include <vector>

#include "qremesh/core/state_vector.hpp"
#include "qremesh/qsim/program.hpp"
#include "qremesh/remesh/encoding.hpp"

namespace qremesh::remesh {

/// How a layout grows by one bit per axis.
///
/// The coarse wires keep their relative order and fill every position of the
/// fine register except new_wires, which start in |0>. After H on the new
/// wires, `swaps` moves each new wire to the least significant slot of its
/// axis, so the fine state reads in `fine` order.
struct ExtendPlan {
  EncodingDescriptor fine;
  std::vector<int> new_wires;  ///< one per axis, in axis order
  qsim::GateProgram swaps;
};

/// Swap mode expects a standard layout; swapless mode expects a swapless
/// layout and needs no SWAP gates. Throws UnsupportedLayout for swapless 3D.
ExtendPlan extend_layout(const EncodingDescriptor& enc, LayoutMode mode);

struct Duplicated {
  core::StateVector state;
  EncodingDescriptor enc;
  qsim::GateProgram program;  ///< H on the new wires, then the swaps
};

/// Embeds the coarse state, applies the plan's program. Every fine amplitude
/// equals 2^{-dims/2} times the coarse amplitude at (coordinates // 2, dof).
/// With entangle_new_wires the new wires get a GHZ pattern instead of
/// independent H (an optional variant, off by default).
Duplicated duplicate_state(const core::StateVector& state, const EncodingDescriptor& enc,
                           LayoutMode mode = LayoutMode::Swap, bool entangle_new_wires = false);

/// Mean over each new axis bit: inverse of duplicate_state up to 2^{-dims/2}.
core::StateVector average_back(const core::StateVector& fine, const EncodingDescriptor& fine_enc);

/// Coordinates of a basis index: axis values (axis order) then the DoF value.
std::vector<std::uint64_t> coordinates(std::uint64_t index, const EncodingDescriptor& enc);
std::uint64_t index_of(const std::vector<std::uint64_t>& coords, const EncodingDescriptor& enc);

}  // namespace qremesh::remesh
