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

#include "qremesh/decomp/measurement.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <tuple>

namespace qremesh::decomp {

namespace {

constexpr double kDropTol = 1e-15;

using Predicate = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

std::vector<DiagonalEntry> merge(const std::map<Predicate, double>& acc) {
  std::vector<DiagonalEntry> out;
  for (const auto& [key, c] : acc) {
    if (std::abs(c) <= kDropTol) continue;
    out.push_back({c, std::get<0>(key), std::get<1>(key), std::get<2>(key)});
  }
  return out;
}

}  // namespace

std::uint64_t MeasurementGroup::decode(std::uint64_t outcome) const {
  if (chain.empty()) return outcome;
  const int n = rotation.num_qubits();
  std::uint64_t j = outcome & ~(std::uint64_t{1} << core::bit_of(n, chain[0]));
  // The ladder maps bit b_k to b_k ^ b_{k-1}; undo it with a running parity.
  std::uint64_t parity = 0;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const int pos = core::bit_of(n, chain[k]);
    parity ^= (j >> pos) & 1U;
    j = (j & ~(std::uint64_t{1} << pos)) | (parity << pos);
  }
  return j;
}

double MeasurementGroup::evaluate(std::uint64_t outcome) const {
  const std::uint64_t j = decode(outcome);
  double v = 0.0;
  for (const auto& e : diagonal) {
    if ((j & e.care) != e.value) continue;
    v += (std::popcount(j & e.parity) & 1) ? -e.coefficient : e.coefficient;
  }
  if (pivot_rotation != PivotRotation::None) {
    const int n = rotation.num_qubits();
    if ((outcome >> core::bit_of(n, chain[0])) & 1U) v = -v;
  }
  return v;
}

Eigen::VectorXd MeasurementGroup::diagonal_values() const {
  const auto dim = Eigen::Index{1} << rotation.num_qubits();
  Eigen::VectorXd d(dim);
  for (Eigen::Index s = 0; s < dim; ++s) d(s) = evaluate(static_cast<std::uint64_t>(s));
  return d;
}

std::vector<MeasurementGroup> measurement_groups(const core::OperatorSum& op) {
  if (!op.hermitian()) throw std::invalid_argument("measurement grouping requires an operator flagged hermitian");
  const int n = op.num_qubits();

  std::map<std::uint64_t, core::OperatorSum> by_mask;
  for (const auto& t : op.terms()) {
    const auto c = core::compile(t);
    auto it = by_mask.try_emplace(c.flip, n).first;
    it->second.add(t);
  }

  std::vector<MeasurementGroup> groups;
  for (const auto& [mask, terms] : by_mask) {
    std::vector<int> chain;
    for (int q = 0; q < n; ++q) {
      if ((mask >> core::bit_of(n, q)) & 1U) chain.push_back(q);
    }
    const std::uint64_t pivot_bit = chain.empty() ? 0 : std::uint64_t{1} << core::bit_of(n, chain[0]);

    std::map<Predicate, double> re;
    std::map<Predicate, double> im;
    for (const auto& t : terms.terms()) {
      const auto c = core::compile(t);
      // Only pairs whose pre-image has the pivot at 0 are visited; the other
      // direction is the hermitian partner.
      if ((c.care & pivot_bit) && (c.value & pivot_bit)) continue;
      const Predicate key{c.care, c.value, c.sign};
      re[key] += c.scale.real();
      im[key] -= c.scale.imag();
    }

    auto make = [&](PivotRotation rot, std::vector<DiagonalEntry> diag) {
      MeasurementGroup g;
      g.pivot_rotation = rot;
      g.flip_mask = mask;
      g.chain = chain;
      g.rotation = qsim::GateProgram(n);
      for (std::size_t k = chain.size(); k-- > 1;) g.rotation.cnot(chain[k - 1], chain[k]);
      if (rot == PivotRotation::Hadamard) g.rotation.h(chain[0]);
      if (rot == PivotRotation::NGate) g.rotation.n(chain[0]);
      g.diagonal = std::move(diag);
      g.terms = terms;
      g.terms.set_hermitian(true);
      groups.push_back(std::move(g));
    };

    if (mask == 0) {
      auto d = merge(re);
      if (!d.empty()) make(PivotRotation::None, std::move(d));
      continue;
    }
    auto dx = merge(re);
    auto dy = merge(im);
    if (!dx.empty()) make(PivotRotation::Hadamard, std::move(dx));
    if (!dy.empty()) make(PivotRotation::NGate, std::move(dy));
  }
  return groups;
}

std::size_t term_count(int nx, int ny) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("term_count requires nx, ny >= 1");
  return static_cast<std::size_t>(2 * nx * ny + 2 * nx + 2 * ny + 2);
}

}  // namespace qremesh::decomp
