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

#include "qremesh/fem/problem.hpp"

#include <cmath>

namespace qremesh::fem {

std::string_view to_string(Model m) {
  switch (m) {
    case Model::HalfPlateCrack:
      return "half_plate_crack";
    case Model::FreePlate:
      return "free_plate";
    case Model::ScalarPoisson:
      return "scalar_poisson";
    case Model::ScalarFdm:
      return "scalar_fdm";
  }
  return "?";
}

std::optional<Model> parse_model(std::string_view s) {
  for (Model m : {Model::HalfPlateCrack, Model::FreePlate, Model::ScalarPoisson, Model::ScalarFdm}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

core::TensorTerm BCDescriptor::to_term() const {
  core::TensorTerm t;
  t.factors.reserve(selector.size());
  for (char c : selector) {
    switch (c) {
      case '0':
        t.factors.push_back(core::Elementary::Pplus);
        break;
      case '1':
        t.factors.push_back(core::Elementary::Pminus);
        break;
      case '*':
        t.factors.push_back(core::Elementary::Identity);
        break;
      default:
        throw InvalidProblem("boundary selector '" + selector + "' may only contain 0, 1 and *");
    }
  }
  return t;
}

bool BCDescriptor::overlaps(const BCDescriptor& other) const {
  if (selector.size() != other.selector.size()) return false;
  for (std::size_t i = 0; i < selector.size(); ++i) {
    const char a = selector[i];
    const char b = other.selector[i];
    if (a != '*' && b != '*' && a != b) return false;
  }
  return true;
}

bool BCDescriptor::matches(std::uint64_t index) const {
  const int n = num_qubits();
  for (int q = 0; q < n; ++q) {
    const char c = selector[q];
    if (c == '*') continue;
    const bool bit = (index >> core::bit_of(n, q)) & 1U;
    if (bit != (c == '1')) return false;
  }
  return true;
}

namespace selectors {

BCDescriptor ligament_uy(int nx, int ny) {
  return {"ligament_uy", std::string(ny, '0') + "1" + std::string(nx - 1, '*') + "1"};
}

BCDescriptor crack_tip_ux(int nx, int ny) {
  return {"crack_tip_ux", std::string(ny, '0') + "1" + std::string(nx - 1, '0') + "0"};
}

BCDescriptor lip_full(int nx, int ny) {
  return {"lip_full", std::string(ny, '0') + "0" + std::string(nx - 1, '*') + "1"};
}

BCDescriptor lip_inner_quarter(int nx, int ny) {
  if (nx < 3) throw InvalidProblem("inner-quarter lip domain requires nx >= 3");
  return {"lip_inner_quarter", std::string(ny, '0') + "011" + std::string(nx - 3, '*') + "1"};
}

BCDescriptor bottom_edge_scalar(int nx, int ny) {
  return {"bottom_edge", std::string(ny, '0') + std::string(nx, '*')};
}

}  // namespace selectors

std::uint64_t ProblemSpec::dof_index(int x, int y, int d) const {
  const std::uint64_t node = (static_cast<std::uint64_t>(y) << nx) | static_cast<std::uint64_t>(x);
  return is_vector(model) ? (node << 1) | static_cast<std::uint64_t>(d) : node;
}

ProblemSpec ProblemSpec::refined(int levels) const {
  ProblemSpec s = *this;
  s.nx += levels;
  s.ny += levels;
  s.bc = default_bc(model, s.nx, s.ny);
  return s;
}

std::vector<BCDescriptor> default_bc(Model m, int nx, int ny) {
  switch (m) {
    case Model::HalfPlateCrack:
      return {selectors::ligament_uy(nx, ny), selectors::crack_tip_ux(nx, ny)};
    case Model::FreePlate:
      return {};
    case Model::ScalarPoisson:
    case Model::ScalarFdm:
      return {selectors::bottom_edge_scalar(nx, ny)};
  }
  return {};
}

ProblemSpec make_problem(Model m, int nx, int ny, double nu) {
  ProblemSpec s;
  s.model = m;
  s.nx = nx;
  s.ny = ny;
  s.nu = nu;
  s.bc = default_bc(m, nx, ny);
  return s;
}

void validate(const ProblemSpec& spec) {
  if (spec.nx < 1 || spec.ny < 1) throw InvalidProblem("mesh exponents nx and ny must be >= 1");
  if (spec.num_qubits() > 26) throw InvalidProblem("problem exceeds 26 qubits");
  if (!(spec.nu >= 0.0 && spec.nu < 0.5)) throw InvalidProblem("Poisson ratio nu must lie in [0, 0.5)");
  if (!(spec.width > 0.0) || !(spec.height > 0.0)) throw InvalidProblem("plate width and height must be positive");
  if (!std::isfinite(spec.load_density)) throw InvalidProblem("load_density must be finite");
  for (const auto& b : spec.bc) {
    if (b.num_qubits() != spec.num_qubits()) {
      throw InvalidProblem("boundary selector '" + b.name + "' has " + std::to_string(b.num_qubits()) +
                           " positions, problem has " + std::to_string(spec.num_qubits()) + " qubits");
    }
    (void)b.to_term();
  }
  for (std::size_t i = 0; i < spec.bc.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.bc.size(); ++j) {
      if (spec.bc[i].overlaps(spec.bc[j])) {
        throw InvalidProblem("boundary selectors '" + spec.bc[i].name + "' and '" + spec.bc[j].name +
                             "' overlap; their sum would not be a projector");
      }
    }
  }
}

}  // namespace qremesh::fem
