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

#include "qremesh/vqa/gradient.hpp"

#include <cmath>
#include <numbers>

namespace qremesh::vqa {

namespace {

CostParts parts_at(const AnsatzCircuit& a, const CostModel& model, const core::StateVector& input,
                   std::span<const double> theta) {
  return model.evaluate_exact(a.apply(input, theta));
}

}  // namespace

double ansatz_cost(const AnsatzCircuit& a, const CostModel& model, const core::StateVector& input,
                   std::span<const double> theta) {
  return parts_at(a, model, input, theta).cost;
}

std::vector<double> parameter_shift_gradient(const AnsatzCircuit& a, const CostModel& model,
                                             const core::StateVector& input, std::span<const double> theta) {
  const CostParts at = parts_at(a, model, input, theta);
  std::vector<double> t(theta.begin(), theta.end());
  std::vector<double> grad(t.size());
  constexpr double kPi = std::numbers::pi;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double orig = t[k];
    t[k] = orig + kPi / 2;
    const double e_plus = parts_at(a, model, input, t).stiffness;
    t[k] = orig - kPi / 2;
    const double e_minus = parts_at(a, model, input, t).stiffness;
    t[k] = orig + kPi;
    const double f_plus = parts_at(a, model, input, t).overlap;
    t[k] = orig - kPi;
    const double f_minus = parts_at(a, model, input, t).overlap;
    t[k] = orig;
    const double dE = (e_plus - e_minus) / 2.0;
    const double dF = (f_plus - f_minus) / 4.0;
    if (model.kind() == CostKind::Energy) {
      grad[k] = 0.5 * dE - dF;
    } else {
      const double E = at.stiffness;
      const double F = at.overlap;
      grad[k] = -F * dF / E + F * F * dE / (2.0 * E * E);
    }
  }
  return grad;
}

std::vector<double> finite_difference_gradient(const AnsatzCircuit& a, const CostModel& model,
                                               const core::StateVector& input, std::span<const double> theta,
                                               double step) {
  std::vector<double> t(theta.begin(), theta.end());
  std::vector<double> grad(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double orig = t[k];
    t[k] = orig + step;
    const double up = ansatz_cost(a, model, input, t);
    t[k] = orig - step;
    const double down = ansatz_cost(a, model, input, t);
    t[k] = orig;
    grad[k] = (up - down) / (2.0 * step);
  }
  return grad;
}

double gradient_check(const AnsatzCircuit& a, const CostModel& model, const core::StateVector& input,
                      std::span<const double> theta, double step) {
  const auto ps = parameter_shift_gradient(a, model, input, theta);
  const auto fd = finite_difference_gradient(a, model, input, theta, step);
  double m = 0.0;
  for (std::size_t k = 0; k < ps.size(); ++k) m = std::max(m, std::abs(ps[k] - fd[k]));
  return m;
}

GradientVariance gradient_variance(const AnsatzCircuit& a, const CostModel& model, const core::StateVector& input,
                                   std::size_t samples, std::uint64_t seed) {
  GradientVariance out;
  out.num_qubits = a.num_qubits();
  out.samples = samples;
  double sum = 0.0;
  double sum_sq = 0.0;
  double abs_sum = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto theta = random_point(a, seed + s);
    const auto g = parameter_shift_gradient(a, model, input, theta);
    sum += g[0];
    sum_sq += g[0] * g[0];
    for (double v : g) abs_sum += std::abs(v);
  }
  if (samples > 0) {
    const double mean = sum / static_cast<double>(samples);
    out.variance = sum_sq / static_cast<double>(samples) - mean * mean;
    out.mean_abs = abs_sum / static_cast<double>(samples * a.num_params());
  }
  return out;
}

}  // namespace qremesh::vqa
