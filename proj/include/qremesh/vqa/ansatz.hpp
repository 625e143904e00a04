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
#include <span>
#include <string>
#include <vector>

#include "qremesh/core/state_vector.hpp"
#include "qremesh/qsim/program.hpp"

namespace qremesh::vqa {

/// Which wires a circuit touches. Wires not listed are left alone, which is
/// how a stage keeps qubits reserved for later refinement untouched.
struct WireLayout {
  std::vector<int> active;

  static WireLayout all(int n);
};

/// Layered RY + CNOT-ladder block B, used as B(alpha) B^dagger(beta).
///
/// Parameters are theta = (alpha, beta), each of size layers * active wires.
/// With alpha == beta the circuit is the identity, so the reference point
/// (r, r) is an exact identity for any r.
class AnsatzCircuit {
 public:
  AnsatzCircuit() = default;
  AnsatzCircuit(int n, int layers, WireLayout layout, std::vector<double> reference);

  int num_qubits() const { return n_; }
  int layers() const { return layers_; }
  const WireLayout& layout() const { return layout_; }
  std::size_t half_size() const { return static_cast<std::size_t>(layers_) * layout_.active.size(); }
  std::size_t num_params() const { return 2 * half_size(); }
  const std::vector<double>& reference() const { return reference_; }

  /// B(alpha) for one half of theta.
  qsim::GateProgram block(std::span<const double> half) const;
  /// B(alpha) B^dagger(beta): the dagger half runs first.
  qsim::GateProgram program(std::span<const double> theta) const;
  core::StateVector apply(const core::StateVector& input, std::span<const double> theta) const;

 private:
  int n_ = 0;
  int layers_ = 0;
  WireLayout layout_;
  std::vector<double> reference_;
};

/// Where the identity point sits. Zero gives B(theta) B^dagger(0): small
/// moves around it rotate along structured directions, which is what lets a
/// fine stage repair a duplicated state. Random draws the reference half
/// uniformly from [-pi, pi) with the seed and duplicates it.
enum class ReferenceKind { Zero, Random };

AnsatzCircuit build_ansatz(int n, int layers, const WireLayout& layout, std::uint64_t seed,
                           ReferenceKind reference = ReferenceKind::Zero);

/// theta0 plus N(0, spread) noise on every entry.
std::vector<double> warm_start_point(const AnsatzCircuit& a, double spread, std::uint64_t seed);
/// Independent uniform angles in [-pi, pi).
std::vector<double> random_point(const AnsatzCircuit& a, std::uint64_t seed);

/// |<a|b>|^2; both states must be normalized.
double fidelity(const core::StateVector& a, const core::StateVector& b);

}  // namespace qremesh::vqa
