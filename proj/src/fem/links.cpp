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

#include "qremesh/fem/links.hpp"

namespace qremesh::fem {

std::array<int, 2> corner_offset(Corner c) {
  switch (c) {
    case Corner::A:
      return {0, 0};
    case Corner::B:
      return {1, 0};
    case Corner::C:
      return {1, 1};
    case Corner::D:
      return {0, 1};
  }
  return {0, 0};
}

char corner_symbol(Corner c) { return static_cast<char>('a' + static_cast<int>(c)); }

std::string LinkPair::label() const { return {corner_symbol(row), corner_symbol(col)}; }

namespace {

Eigen::Matrix2d mat(double a, double b, double c, double d) {
  Eigen::Matrix2d m;
  m << a, b, c, d;
  return m;
}

// Upper-triangle closed forms; the lower triangle follows from K_ji = K_ij^T.
Eigen::Matrix2d upper_link(double nu, Corner i, Corner j) {
  const double diag = 0.5 - 2.0 * nu / 3.0;
  const double near = -0.25 + nu / 6.0;
  const double shear = 0.125 - nu / 2.0;
  const double across = -0.25 + nu / 3.0;
  const int key = static_cast<int>(i) * 4 + static_cast<int>(j);
  switch (key) {
    case 0:   // aa
    case 10:  // cc
      return mat(diag, 0.125, 0.125, diag);
    case 5:   // bb
    case 15:  // dd
      return mat(diag, -0.125, -0.125, diag);
    case 1:   // ab
    case 11:  // cd
      return mat(near, -shear, shear, nu / 6.0);
    case 3:  // ad
      return mat(nu / 6.0, shear, -shear, near);
    case 2:  // ac
      return mat(across, -0.125, -0.125, across);
    case 7:  // bd
      return mat(across, 0.125, 0.125, across);
    case 6:  // bc = (cb)^T with cb = ad
      return upper_link(nu, Corner::A, Corner::D).transpose();
  }
  return Eigen::Matrix2d::Zero();
}

}  // namespace

Eigen::Matrix2d elementary_link(double nu, LinkPair pair) {
  if (static_cast<int>(pair.row) <= static_cast<int>(pair.col)) return upper_link(nu, pair.row, pair.col);
  return upper_link(nu, pair.col, pair.row).transpose();
}

Eigen::Matrix4d scalar_link(ScalarKind kind) {
  Eigen::Matrix4d m;
  if (kind == ScalarKind::PoissonFem) {
    m << 4, -1, -2, -1,
        -1, 4, -1, -2,
        -2, -1, 4, -1,
        -1, -2, -1, 4;
  } else {
    m << 2, -1, 0, -1,
        -1, 2, -1, 0,
        0, -1, 2, -1,
        -1, 0, -1, 2;
  }
  return m;
}

double scalar_assembly_weight(ScalarKind kind) { return kind == ScalarKind::LaplaceFdm ? 0.5 : 1.0; }

ScalarKind scalar_kind(Model m) {
  if (m == Model::ScalarPoisson) return ScalarKind::PoissonFem;
  if (m == Model::ScalarFdm) return ScalarKind::LaplaceFdm;
  throw InvalidProblem("model '" + std::string(to_string(m)) + "' has no scalar link table");
}

}  // namespace qremesh::fem
