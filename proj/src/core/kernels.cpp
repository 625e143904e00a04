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

#include "qremesh/core/kernels.hpp"

#include <bit>
#include <stdexcept>

namespace qremesh::core {

namespace {

void check_width(const StateVector& s, int n) {
  if (s.num_qubits() != n) {
    throw LengthMismatch("state has " + std::to_string(s.num_qubits()) + " qubits, operator has " +
                         std::to_string(n));
  }
}

// Visits every index j with (j & care) == value, passing weight(j).
template <typename Fn>
void for_each_support(const CompiledTerm& c, std::uint64_t dim, Fn&& fn) {
  const std::uint64_t free = ~c.care & (dim - 1);
  std::uint64_t s = 0;
  do {
    const std::uint64_t j = c.value | s;
    const Complex w = (std::popcount(j & c.sign) & 1) ? -c.scale : c.scale;
    fn(j, w);
    s = (s - free) & free;
  } while (s != 0);
}

void accumulate(const StateVector& in, const TensorTerm& term, StateVector& out) {
  const CompiledTerm c = compile(term);
  const auto src = in.amplitudes();
  auto dst = out.amplitudes();
  for_each_support(c, in.dimension(), [&](std::uint64_t j, Complex w) { dst[j ^ c.flip] += w * src[j]; });
}

}  // namespace

StateVector apply_term(const StateVector& state, const TensorTerm& term) {
  check_width(state, term.num_qubits());
  StateVector out(state.num_qubits(), std::vector<Complex>(state.dimension()));
  accumulate(state, term, out);
  return out;
}

StateVector apply_sum(const StateVector& state, const OperatorSum& op) {
  check_width(state, op.num_qubits());
  StateVector out(state.num_qubits(), std::vector<Complex>(state.dimension()));
  for (const auto& t : op.terms()) accumulate(state, t, out);
  return out;
}

Complex matrix_element(const StateVector& bra, const TensorTerm& term, const StateVector& ket) {
  check_width(bra, term.num_qubits());
  check_width(ket, term.num_qubits());
  const CompiledTerm c = compile(term);
  const auto a = bra.amplitudes();
  const auto b = ket.amplitudes();
  Complex acc{};
  for_each_support(c, ket.dimension(), [&](std::uint64_t j, Complex w) { acc += std::conj(a[j ^ c.flip]) * w * b[j]; });
  return acc;
}

Complex expectation_direct(const StateVector& psi, const OperatorSum& op) {
  check_width(psi, op.num_qubits());
  if (!psi.is_normalized()) throw std::invalid_argument("expectation_direct requires a normalized state");
  Complex acc{};
  for (const auto& t : op.terms()) acc += matrix_element(psi, t, psi);
  return acc;
}

Complex expectation_heralded(const StateVector& psi, const OperatorSum& op) {
  check_width(psi, op.num_qubits());
  if (!psi.is_normalized()) throw std::invalid_argument("expectation_heralded requires a normalized state");
  Complex acc{};
  for (const auto& t : op.terms()) {
    const CompiledTerm c = compile(t);
    const StateVector mapped = apply_term(psi, TensorTerm(1.0, t.factors));
    if (c.flip == 0 && c.sign == 0) {
      // Projector string: the heralding probability is ||P psi||^2.
      const double nrm = mapped.norm();
      acc += t.coefficient * nrm * nrm;
    } else {
      acc += t.coefficient * inner(psi, mapped);
    }
  }
  return acc;
}

}  // namespace qremesh::core
