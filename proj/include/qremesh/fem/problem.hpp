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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qremesh/core/operator_sum.hpp"

namespace qremesh::fem {

enum class Model { HalfPlateCrack, FreePlate, ScalarPoisson, ScalarFdm };

std::string_view to_string(Model m);
std::optional<Model> parse_model(std::string_view s);

inline bool is_vector(Model m) { return m == Model::HalfPlateCrack || m == Model::FreePlate; }

/// Raised when a problem or configuration violates a precondition.
/// The message names the violated rule.
class InvalidProblem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Selector of a set of degrees of freedom, one character per qubit in
/// |y, x[, d]> order: '0' or '1' pins the bit, '*' leaves it free.
/// Materializes to a tensor string of p+, p- and I.
struct BCDescriptor {
  std::string name;
  std::string selector;

  int num_qubits() const { return static_cast<int>(selector.size()); }
  core::TensorTerm to_term() const;
  /// True when some basis index matches both selectors.
  bool overlaps(const BCDescriptor& other) const;
  bool matches(std::uint64_t index) const;
};

namespace selectors {
/// u_y = 0 on the uncracked ligament: y = 0, x >= N_x/2, d = 1.
BCDescriptor ligament_uy(int nx, int ny);
/// u_x = 0 at the crack tip node: y = 0, x = N_x/2, d = 0.
BCDescriptor crack_tip_ux(int nx, int ny);
/// Vertical DoFs of the whole crack lip: y = 0, x < N_x/2, d = 1.
BCDescriptor lip_full(int nx, int ny);
/// Vertical DoFs of the lip quarter next to the tip: x in [3N_x/8, N_x/2).
BCDescriptor lip_inner_quarter(int nx, int ny);
/// Scalar models: every node of the bottom row.
BCDescriptor bottom_edge_scalar(int nx, int ny);
}  // namespace selectors

/// Plate geometry, material, load and boundary description.
///
/// Nodes form a 2^nx by 2^ny grid of unit elements. The physical width only
/// enters the observables and the per-node load.
struct ProblemSpec {
  int nx = 2;
  int ny = 2;
  double nu = 0.3;
  double width = 1.0;
  double height = 1.0;
  double load_density = 1.0;
  Model model = Model::HalfPlateCrack;
  std::vector<BCDescriptor> bc;

  int num_qubits() const { return nx + ny + (is_vector(model) ? 1 : 0); }
  int nodes_x() const { return 1 << nx; }
  int nodes_y() const { return 1 << ny; }
  std::uint64_t dimension() const { return std::uint64_t{1} << num_qubits(); }
  /// Force carried by each loaded top-edge node.
  double nodal_load() const { return load_density * width / nodes_x(); }

  /// Basis index of node (x, y), component d (d ignored for scalar models).
  std::uint64_t dof_index(int x, int y, int d = 0) const;

  /// Same problem one refinement level up (one more bit per axis); the
  /// boundary set is rebuilt for the finer mesh.
  ProblemSpec refined(int levels = 1) const;
};

/// Boundary set used when a configuration does not list one.
std::vector<BCDescriptor> default_bc(Model m, int nx, int ny);

ProblemSpec make_problem(Model m, int nx, int ny, double nu);

/// Throws InvalidProblem naming the first violated rule.
void validate(const ProblemSpec& spec);

}  // namespace qremesh::fem
