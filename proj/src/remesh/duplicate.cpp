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

#include "qremesh/remesh/duplicate.hpp"

#include <cmath>

#include "qremesh/core/operator_sum.hpp"

namespace qremesh::remesh {

namespace {

WireLabel shifted(WireLabel l) {
  if (l.role == RegisterRole::Axis) ++l.bit;
  return l;
}

}  // namespace

ExtendPlan extend_layout(const EncodingDescriptor& enc, LayoutMode mode) {
  const int n = enc.num_qubits();
  const int dims = enc.dims();
  ExtendPlan plan;
  plan.fine = enc.refined();
  plan.swaps = qsim::GateProgram(n + dims);

  if (mode == LayoutMode::Swapless) {
    const auto expected = EncodingDescriptor::swapless(dims, enc.all_axis_bits(), enc.dof_bits());
    if (!(enc.labels() == expected.labels())) throw UnsupportedLayout("swapless refinement needs a swapless layout");
    // New least significant bits sit where the fine layout wants them.
    for (int a = 0; a < dims; ++a) plan.new_wires.push_back(plan.fine.wire_of({RegisterRole::Axis, a, 0}));
    return plan;
  }

  if (!enc.is_standard()) throw UnsupportedLayout("swap refinement needs the standard layout");
  for (int a = 0; a < dims; ++a) plan.new_wires.push_back(n + a);

  // Current wire contents: old labels shifted up one bit, then new LSBs.
  std::vector<WireLabel> cur;
  for (const auto& l : enc.labels()) cur.push_back(shifted(l));
  for (int a = 0; a < dims; ++a) cur.push_back({RegisterRole::Axis, a, 0});
  const auto target = plan.fine.labels();
  // Adjacent-swap ladder: bubble each wanted label up into place.
  for (std::size_t p = 0; p < target.size(); ++p) {
    std::size_t q = p;
    while (!(cur[q] == target[p])) ++q;
    for (; q > p; --q) {
      plan.swaps.swap(static_cast<int>(q - 1), static_cast<int>(q));
      std::swap(cur[q - 1], cur[q]);
    }
  }
  return plan;
}

Duplicated duplicate_state(const core::StateVector& state, const EncodingDescriptor& enc, LayoutMode mode,
                           bool entangle_new_wires) {
  if (state.num_qubits() != enc.num_qubits()) throw core::LengthMismatch("state does not match the encoding");
  ExtendPlan plan = extend_layout(enc, mode);
  const int n = enc.num_qubits();
  const int m = n + enc.dims();

  // Embed: coarse wires fill the non-new positions in order.
  std::vector<int> old_pos;
  for (int q = 0; q < m; ++q) {
    bool is_new = false;
    for (int w : plan.new_wires) is_new = is_new || w == q;
    if (!is_new) old_pos.push_back(q);
  }
  std::vector<core::Complex> amps(std::size_t{1} << m);
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    std::uint64_t j = 0;
    for (int q = 0; q < n; ++q) {
      const std::uint64_t bit = (i >> core::bit_of(n, q)) & 1U;
      j |= bit << core::bit_of(m, old_pos[static_cast<std::size_t>(q)]);
    }
    amps[j] = state[i];
  }

  Duplicated out{core::StateVector(m, std::move(amps)), plan.fine, qsim::GateProgram(m)};
  if (entangle_new_wires) {
    out.program.h(plan.new_wires[0]);
    for (std::size_t k = 1; k < plan.new_wires.size(); ++k) out.program.cnot(plan.new_wires[k - 1], plan.new_wires[k]);
  } else {
    for (int w : plan.new_wires) out.program.h(w);
  }
  out.program.append(plan.swaps);
  qsim::apply_program_inplace(out.state, out.program);
  return out;
}

std::vector<std::uint64_t> coordinates(std::uint64_t index, const EncodingDescriptor& enc) {
  const int n = enc.num_qubits();
  std::vector<std::uint64_t> c(static_cast<std::size_t>(enc.dims()) + 1, 0);
  const auto labels = enc.labels();
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = (index >> core::bit_of(n, q)) & 1U;
    const auto& l = labels[static_cast<std::size_t>(q)];
    const std::size_t slot = l.role == RegisterRole::Dof ? c.size() - 1 : static_cast<std::size_t>(l.axis);
    c[slot] |= bit << l.bit;
  }
  return c;
}

std::uint64_t index_of(const std::vector<std::uint64_t>& coords, const EncodingDescriptor& enc) {
  const int n = enc.num_qubits();
  const auto labels = enc.labels();
  std::uint64_t idx = 0;
  for (int q = 0; q < n; ++q) {
    const auto& l = labels[static_cast<std::size_t>(q)];
    const std::size_t slot = l.role == RegisterRole::Dof ? coords.size() - 1 : static_cast<std::size_t>(l.axis);
    idx |= ((coords[slot] >> l.bit) & 1U) << core::bit_of(n, q);
  }
  return idx;
}

core::StateVector average_back(const core::StateVector& fine, const EncodingDescriptor& fine_enc) {
  if (fine.num_qubits() != fine_enc.num_qubits()) throw core::LengthMismatch("state does not match the encoding");
  std::vector<Register> regs = fine_enc.registers();
  for (auto& r : regs) {
    if (r.role == RegisterRole::Axis) {
      if (r.bits < 2) throw UnsupportedLayout("cannot coarsen a one-bit axis");
      --r.bits;
    }
  }
  const EncodingDescriptor coarse(fine_enc.dims(), regs);
  const double w = 1.0 / static_cast<double>(1U << fine_enc.dims());
  std::vector<core::Complex> amps(std::size_t{1} << coarse.num_qubits());
  for (std::uint64_t i = 0; i < fine.dimension(); ++i) {
    auto c = coordinates(i, fine_enc);
    for (std::size_t a = 0; a + 1 < c.size(); ++a) c[a] >>= 1;
    amps[index_of(c, coarse)] += w * fine[i];
  }
  return core::StateVector(coarse.num_qubits(), std::move(amps));
}

}  // namespace qremesh::remesh
