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

#include <Eigen/Dense>
#include <array>
#include <string>

#include "qremesh/fem/problem.hpp"

namespace qremesh::fem {

// Local corners of a unit element: a = (x, y), b = (x+1, y),
// c = (x+1, y+1), d = (x, y+1).
enum class Corner { A = 0, B = 1, C = 2, D = 3 };

inline constexpr std::array<Corner, 4> kCorners{Corner::A, Corner::B, Corner::C, Corner::D};

/// Grid offset (dx, dy) of a corner relative to the element origin.
std::array<int, 2> corner_offset(Corner c);
char corner_symbol(Corner c);

struct LinkPair {
  Corner row;
  Corner col;
  std::string label() const;
};

/// Plane-strain 2x2 coupling between DoFs (u_x, u_y) of two corners, for a
/// unit element and unit modulus scale.
Eigen::Matrix2d elementary_link(double nu, LinkPair pair);

enum class ScalarKind { PoissonFem, LaplaceFdm };

/// 4x4 corner table of a scalar discretization, indexed [row][col] by Corner.
Eigen::Matrix4d scalar_link(ScalarKind kind);

/// Weight applied to the scalar table during assembly. Every FDM edge is
/// shared by two elements, so its table enters with one half.
double scalar_assembly_weight(ScalarKind kind);

ScalarKind scalar_kind(Model m);

}  // namespace qremesh::fem
