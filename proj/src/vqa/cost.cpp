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

#include "qremesh/vqa/cost.hpp"

#include <cmath>

#include "qremesh/core/kernels.hpp"
#include "qremesh/qsim/grouped.hpp"

namespace qremesh::vqa {

std::string_view to_string(CostKind k) { return k == CostKind::Energy ? "energy" : "quotient"; }

std::optional<CostKind> parse_cost_kind(std::string_view s) {
  if (s == "energy") return CostKind::Energy;
  if (s == "quotient") return CostKind::Quotient;
  return std::nullopt;
}

CostParts combine(CostKind kind, double stiffness, double overlap, double overlap_sq) {
  CostParts p;
  p.stiffness = stiffness;
  p.overlap = overlap;
  p.overlap_sq = overlap_sq;
  if (kind == CostKind::Energy) {
    p.cost = 0.5 * stiffness - overlap;
  } else {
    if (!(stiffness > kQuotientFloor)) throw DegenerateQuotient("quotient cost needs <psi|K|psi> > 0");
    p.cost = -overlap_sq / (2.0 * stiffness);
  }
  return p;
}

double cost_energy(const core::StateVector& psi, const core::OperatorSum& K, const core::StateVector& f_state) {
  const double e = core::expectation_direct(psi, K).real();
  const double f = core::inner(psi, f_state).real();
  return combine(CostKind::Energy, e, f, f * f).cost;
}

double cost_quotient(const core::StateVector& psi, const core::OperatorSum& K, const core::StateVector& f_state) {
  const double e = core::expectation_direct(psi, K).real();
  const double f = core::inner(f_state, psi).real();
  return combine(CostKind::Quotient, e, f, f * f).cost;
}

CostModel::CostModel(core::OperatorSum K, core::StateVector f_state, qsim::GateProgram f_preparation, CostKind kind,
                     qsim::ShotConfig shots)
    : K_(std::move(K)), f_(std::move(f_state)), f_prep_(std::move(f_preparation)), kind_(kind), shots_(shots) {
  if (K_.num_qubits() != f_.num_qubits()) throw core::LengthMismatch("stiffness and force widths differ");
  if (!shots_.exact() && kind_ == CostKind::Energy) {
    throw std::invalid_argument("shot mode supports the quotient cost only");
  }
}

const std::vector<decomp::MeasurementGroup>& CostModel::groups() const {
  if (!groups_) groups_ = decomp::measurement_groups(K_);
  return *groups_;
}

CostParts CostModel::evaluate_exact(const core::StateVector& psi) const {
  const double e = core::expectation_direct(psi, K_).real();
  const double f = core::inner(f_, psi).real();
  return combine(kind_, e, f, f * f);
}

CostParts CostModel::evaluate(const core::StateVector& psi) const {
  ++evaluations_;
  if (shots_.exact()) return evaluate_exact(psi);

  qsim::ShotConfig cfg = shots_;
  if (iteration_ < mitigation_start_) cfg.mitigation_threshold.reset();
  // Fresh, reproducible streams for every evaluation.
  const std::uint64_t base = evaluations_ * (groups().size() + 1);
  const qsim::Estimate e = qsim::expectation_grouped(psi, groups(), cfg, base);
  const qsim::Estimate f2 = qsim::overlap_probability(psi, f_prep_, cfg, base + groups().size());
  CostParts p = combine(kind_, e.value, std::sqrt(f2.value), f2.value);
  // First-order propagation through -F^2 / (2E).
  const double dF = f2.std_error / (2.0 * e.value);
  const double dE = f2.value * e.std_error / (2.0 * e.value * e.value);
  p.std_error = std::hypot(dF, dE);
  return p;
}

}  // namespace qremesh::vqa
