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

#include "qremesh/vqa/ansatz.hpp"

#include <numbers>
#include <random>
#include <stdexcept>

#include "qremesh/qsim/sampling.hpp"

namespace qremesh::vqa {

WireLayout WireLayout::all(int n) {
  WireLayout w;
  for (int q = 0; q < n; ++q) w.active.push_back(q);
  return w;
}

AnsatzCircuit::AnsatzCircuit(int n, int layers, WireLayout layout, std::vector<double> reference)
    : n_(n), layers_(layers), layout_(std::move(layout)), reference_(std::move(reference)) {
  if (layers_ < 1) throw std::invalid_argument("ansatz needs at least one layer");
  if (layout_.active.empty()) throw std::invalid_argument("ansatz needs at least one active wire");
  for (int q : layout_.active) {
    if (q < 0 || q >= n_) throw qsim::BadTarget("active wire " + std::to_string(q) + " out of range");
  }
  if (reference_.size() != num_params()) throw std::invalid_argument("reference length does not match the ansatz");
}

qsim::GateProgram AnsatzCircuit::block(std::span<const double> half) const {
  if (half.size() != half_size()) throw std::invalid_argument("parameter block has the wrong length");
  qsim::GateProgram p(n_);
  const auto& w = layout_.active;
  for (int l = 0; l < layers_; ++l) {
    for (std::size_t a = 0; a < w.size(); ++a) p.ry(w[a], half[static_cast<std::size_t>(l) * w.size() + a]);
    for (std::size_t a = 0; a + 1 < w.size(); ++a) p.cnot(w[a], w[a + 1]);
  }
  return p;
}

qsim::GateProgram AnsatzCircuit::program(std::span<const double> theta) const {
  if (theta.size() != num_params()) {
    throw std::invalid_argument("ansatz expects " + std::to_string(num_params()) + " parameters, got " +
                                std::to_string(theta.size()));
  }
  const std::size_t h = half_size();
  qsim::GateProgram p = block(theta.subspan(h, h)).inverse();
  p.append(block(theta.subspan(0, h)));
  return p;
}

core::StateVector AnsatzCircuit::apply(const core::StateVector& input, std::span<const double> theta) const {
  return qsim::apply_program(input, program(theta));
}

AnsatzCircuit build_ansatz(int n, int layers, const WireLayout& layout, std::uint64_t seed,
                           ReferenceKind reference) {
  auto rng = qsim::derive_rng(seed, 0xA5A5);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const std::size_t h = static_cast<std::size_t>(layers) * layout.active.size();
  std::vector<double> ref(2 * h, 0.0);
  if (reference == ReferenceKind::Zero) return AnsatzCircuit(n, layers, layout, std::move(ref));
  for (std::size_t i = 0; i < h; ++i) ref[i] = ref[h + i] = angle(rng);
  return AnsatzCircuit(n, layers, layout, std::move(ref));
}

std::vector<double> warm_start_point(const AnsatzCircuit& a, double spread, std::uint64_t seed) {
  auto rng = qsim::derive_rng(seed, 0x5EED);
  std::normal_distribution<double> noise(0.0, spread);
  std::vector<double> t = a.reference();
  if (spread > 0.0) {
    for (double& v : t) v += noise(rng);
  }
  return t;
}

std::vector<double> random_point(const AnsatzCircuit& a, std::uint64_t seed) {
  auto rng = qsim::derive_rng(seed, 0xC01D);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<double> t(a.num_params());
  for (double& v : t) v = angle(rng);
  return t;
}

double fidelity(const core::StateVector& a, const core::StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw core::LengthMismatch("fidelity of states with different widths");
  if (!a.is_normalized() || !b.is_normalized()) throw std::invalid_argument("fidelity requires normalized states");
  return std::min(1.0, std::norm(core::inner(a, b)));
}

}  // namespace qremesh::vqa
