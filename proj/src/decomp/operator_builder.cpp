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

#include "qremesh/decomp/operator_builder.hpp"

#include "qremesh/fem/links.hpp"

namespace qremesh::decomp {

using core::Elementary;
using core::OperatorSum;
using fem::Corner;

namespace {

constexpr double kDropTol = 1e-15;

enum class Axis { TrimLast, TrimFirst, Shift, ShiftT };

OperatorSum axis_operator(Axis a, int m) {
  switch (a) {
    case Axis::TrimLast:
      return trim_last(m);
    case Axis::TrimFirst:
      return trim_first(m);
    case Axis::Shift:
      return shift_up(m);
    case Axis::ShiftT:
      return shift_up(m).adjoint();
  }
  return OperatorSum(m);
}

// Where the (row, col) corner coupling lands along one axis: both corners on
// the low side -> TrimLast, both high -> TrimFirst, low->high -> Shift.
Axis placement(int row_offset, int col_offset) {
  if (row_offset == col_offset) return row_offset == 0 ? Axis::TrimLast : Axis::TrimFirst;
  return row_offset < col_offset ? Axis::Shift : Axis::ShiftT;
}

}  // namespace

OperatorSum trim_last(int m) {
  OperatorSum op = core::identity_op(m) - core::power_op(Elementary::Pminus, m);
  op.set_hermitian(true);
  return op;
}

OperatorSum trim_first(int m) {
  OperatorSum op = core::identity_op(m) - core::power_op(Elementary::Pplus, m);
  op.set_hermitian(true);
  return op;
}

OperatorSum shift_up(int m) {
  OperatorSum op(m);
  for (int k = 0; k < m; ++k) {
    std::vector<Elementary> f(static_cast<std::size_t>(m), Elementary::Identity);
    f[static_cast<std::size_t>(k)] = Elementary::SigmaPlus;
    for (int r = k + 1; r < m; ++r) f[static_cast<std::size_t>(r)] = Elementary::SigmaMinus;
    op.add(core::TensorTerm(1.0, std::move(f)));
  }
  return op;
}

OperatorSum link_operator(const Eigen::Matrix2d& k) {
  OperatorSum op(1);
  const std::pair<double, Elementary> parts[] = {{k(0, 0), Elementary::Pplus},
                                                 {k(1, 1), Elementary::Pminus},
                                                 {k(0, 1), Elementary::SigmaPlus},
                                                 {k(1, 0), Elementary::SigmaMinus}};
  for (const auto& [c, e] : parts) {
    if (c != 0.0) op.add(core::TensorTerm(c, {e}));
  }
  return op;
}

OperatorSum build_operator(const fem::ProblemSpec& spec) {
  fem::validate(spec);
  const bool vec = fem::is_vector(spec.model);
  Eigen::Matrix4d table = Eigen::Matrix4d::Zero();
  if (!vec) {
    const auto kind = fem::scalar_kind(spec.model);
    table = fem::scalar_link(kind) * fem::scalar_assembly_weight(kind);
  }

  OperatorSum K(spec.num_qubits());
  for (Corner i : fem::kCorners) {
    for (Corner j : fem::kCorners) {
      const auto oi = fem::corner_offset(i);
      const auto oj = fem::corner_offset(j);
      const OperatorSum ys = axis_operator(placement(oi[1], oj[1]), spec.ny);
      const OperatorSum xs = axis_operator(placement(oi[0], oj[0]), spec.nx);
      if (vec) {
        K.add(core::kron({ys, xs, link_operator(fem::elementary_link(spec.nu, {i, j}))}));
      } else {
        const double w = table(static_cast<int>(i), static_cast<int>(j));
        if (w != 0.0) K.add(core::kron(ys, xs).scaled(w));
      }
    }
  }
  OperatorSum out = K.simplified(kDropTol);
  out.set_hermitian(true);
  return out;
}

std::size_t term_bound(int nx, int ny) {
  // Shift-shift products dominate: 4 corner pairs, nx*ny strings each, and up
  // to 4 link components per string.
  return static_cast<std::size_t>(16 * nx * ny + 32 * (nx + ny) + 64);
}

}  // namespace qremesh::decomp
