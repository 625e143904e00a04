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

namespace qremesh::remesh {

/// Node coordinates of a regular q-bit axis spanning [0, L]: k L / (2^q - 1).
std::vector<double> node_positions(int q, double length);

/// True when every node of the q-bit axis lies between its two successors on
/// the (q+1)-bit axis: p(q+1, 2k) <= p(q, k) <= p(q+1, 2k+1).
bool projection_inequality_holds(int q, double length = 1.0);

}  // namespace qremesh::remesh
