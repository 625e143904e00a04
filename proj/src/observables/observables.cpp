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

#include "qremesh/observables/observables.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qremesh/core/kernels.hpp"
#include "qremesh/decomp/measurement.hpp"
#include "qremesh/decomp/projectors.hpp"
#include "qremesh/qsim/grouped.hpp"
#include "qremesh/qsim/program.hpp"

namespace qremesh::observables {

namespace {

void require_crack(const fem::ProblemSpec& spec) {
  if (spec.model != fem::Model::HalfPlateCrack) throw fem::InvalidProblem("observables require the half_plate_crack model");
}

double lip_probability(const core::StateVector& psi, const fem::ProblemSpec& spec, fem::LipDomain domain) {
  const fem::BCDescriptor sel = fem::lip_selector(spec, domain);
  double p = 0.0;
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    if (sel.matches(i)) p += std::norm(psi[i]);
  }
  return p;
}

}  // namespace

std::uint64_t cod_basis_index(const fem::ProblemSpec& spec, CodIndex which) {
  return which == CodIndex::LiteralZero ? 0 : fem::crack_mouth_index(spec);
}

double force_norm(const fem::ProblemSpec& spec) {
  return spec.nodal_load() * std::sqrt(static_cast<double>(spec.nodes_x()));
}

double norm_from_parts(double stiffness, double overlap, double load_norm) {
  if (!(stiffness > 0.0)) throw std::domain_error("norm estimate needs <psi|K|psi> > 0");
  return std::abs(overlap) / stiffness * load_norm;
}

double norm_estimate(const core::StateVector& psi, const core::OperatorSum& K, const core::StateVector& f_state,
                     const fem::ProblemSpec& spec) {
  const double e = core::expectation_direct(psi, K).real();
  return norm_from_parts(e, std::abs(core::inner(f_state, psi)), force_norm(spec));
}

double cod(const core::StateVector& psi, double norm, std::uint64_t index) {
  if (index >= psi.dimension()) throw std::out_of_range("COD index outside the state");
  return psi[index].real() * norm;
}

double sif_from_parts(double lip_prob, double norm, const fem::ProblemSpec& spec, fem::LipDomain domain) {
  if (domain == fem::LipDomain::InnerQuarter && spec.nx < 3) {
    throw fem::InvalidProblem("inner-quarter lip domain requires nx >= 3");
  }
  const double h = spec.width / spec.nodes_x();
  return fem::sif_from_lip_integral(norm * norm * lip_prob * h, fem::lip_length(spec, domain), spec.nu);
}

double sif_quantum(const core::StateVector& psi, const fem::ProblemSpec& spec, fem::LipDomain domain,
                   const core::OperatorSum& K, const core::StateVector& f_state) {
  require_crack(spec);
  const double norm = norm_estimate(psi, K, f_state, spec);
  const auto P = decomp::lip_projector(spec, domain);
  const double p = core::expectation_direct(psi, P).real();
  return sif_from_parts(p, norm, spec, domain);
}

core::StateVector align_phase(const core::StateVector& psi, const core::StateVector& f_state) {
  const core::Complex ov = core::inner(f_state, psi);
  if (std::abs(ov) == 0.0) return psi;
  const core::Complex phase = std::conj(ov) / std::abs(ov);
  std::vector<core::Complex> a(psi.amplitudes().begin(), psi.amplitudes().end());
  for (auto& v : a) v *= phase;
  return core::StateVector(psi.num_qubits(), std::move(a));
}

ObservableReport evaluate(const core::StateVector& psi_in, const fem::ProblemSpec& spec, const core::OperatorSum& K,
                          CodIndex which, const qsim::ShotConfig& shots) {
  require_crack(spec);
  const core::StateVector f_state = qsim::prepare_force_state(spec.nx, spec.ny);
  const core::StateVector psi = align_phase(psi_in, f_state);
  ObservableReport r;
  r.cod_index = cod_basis_index(spec, which);
  const bool inner = spec.nx >= 3;

  if (shots.exact()) {
    r.stiffness = core::expectation_direct(psi, K).real();
    r.overlap = std::abs(core::inner(f_state, psi));
    r.lip_probability = lip_probability(psi, spec, fem::LipDomain::FullLip);
    r.lip_probability_restricted = inner ? lip_probability(psi, spec, fem::LipDomain::InnerQuarter) : 0.0;
    r.norm = norm_from_parts(r.stiffness, r.overlap, force_norm(spec));
    r.cod = cod(psi, r.norm, r.cod_index);
  } else {
    const auto kgroups = decomp::measurement_groups(K);
    const qsim::Estimate e = qsim::expectation_grouped(psi, kgroups, shots, 0);
    const qsim::Estimate f2 = qsim::overlap_probability(psi, qsim::force_program(spec.nx, spec.ny), shots, 1000);
    const auto pgroups = decomp::measurement_groups(decomp::lip_projector(spec, fem::LipDomain::FullLip));
    const qsim::Estimate p = qsim::expectation_grouped(psi, pgroups, shots, 2000);
    r.stiffness = e.value;
    r.overlap = std::sqrt(std::max(0.0, f2.value));
    r.lip_probability = p.value;
    if (inner) {
      const auto qgroups = decomp::measurement_groups(decomp::lip_projector(spec, fem::LipDomain::InnerQuarter));
      r.lip_probability_restricted = qsim::expectation_grouped(psi, qgroups, shots, 3000).value;
    }
    r.norm = norm_from_parts(r.stiffness, r.overlap, force_norm(spec));
    const auto counts = qsim::sample(psi, {shots.shots, shots.seed + 4000, std::nullopt});
    const auto it = counts.find(r.cod_index);
    const double pc = it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(*shots.shots);
    r.cod = std::sqrt(pc) * r.norm;
    // SIF ~ sqrt(P * F^2) / E: relative errors add in quadrature.
    const double rel = std::sqrt(std::pow(p.std_error / (2.0 * std::max(p.value, 1e-300)), 2) +
                                 std::pow(f2.std_error / (2.0 * std::max(f2.value, 1e-300)), 2) +
                                 std::pow(e.std_error / e.value, 2));
    r.sif_std_error = rel;  // scaled below once the SIF is known
  }
  r.sif = sif_from_parts(r.lip_probability, r.norm, spec, fem::LipDomain::FullLip);
  r.sif_restricted = inner ? sif_from_parts(r.lip_probability_restricted, r.norm, spec, fem::LipDomain::InnerQuarter)
                           : std::numeric_limits<double>::quiet_NaN();
  r.sif_std_error *= r.sif;
  return r;
}

}  // namespace qremesh::observables
