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

#include "qremesh/remesh/positions.hpp"

#include <stdexcept>

namespace qremesh::remesh {

std::vector<double> node_positions(int q, double length) {
  if (q < 1 || q > 30) throw std::invalid_argument("axis bits must lie in [1, 30]");
  const std::size_t count = std::size_t{1} << q;
  const double denom = static_cast<double>(count - 1);
  std::vector<double> p(count);
  for (std::size_t k = 0; k < count; ++k) p[k] = static_cast<double>(k) * length / denom;
  return p;
}

bool projection_inequality_holds(int q, double length) {
  const auto coarse = node_positions(q, length);
  const auto fine = node_positions(q + 1, length);
  for (std::size_t k = 0; k < coarse.size(); ++k) {
    if (!(fine[2 * k] <= coarse[k] && coarse[k] <= fine[2 * k + 1])) return false;
  }
  return true;
}

}  // namespace qremesh::remesh
