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

#include "qremesh/fem/classical_observables.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qremesh::fem {

namespace {

void require_crack(const ProblemSpec& spec, const Eigen::VectorXd& u) {
  if (spec.model != Model::HalfPlateCrack) throw InvalidProblem("crack observables require the half_plate_crack model");
  if (static_cast<std::uint64_t>(u.size()) != spec.dimension()) {
    throw InvalidProblem("displacement vector length does not match the problem dimension");
  }
}

double spacing(const ProblemSpec& spec) { return spec.width / spec.nodes_x(); }

}  // namespace

std::string_view to_string(LipDomain d) { return d == LipDomain::FullLip ? "full_lip" : "inner_quarter"; }

BCDescriptor lip_selector(const ProblemSpec& spec, LipDomain domain) {
  return domain == LipDomain::FullLip ? selectors::lip_full(spec.nx, spec.ny)
                                      : selectors::lip_inner_quarter(spec.nx, spec.ny);
}

double lip_length(const ProblemSpec& spec, LipDomain domain) {
  return domain == LipDomain::FullLip ? spec.width / 2.0 : spec.width / 8.0;
}

double sif_from_lip_integral(double lip_u2_integral, double domain_length, double nu) {
  const double r2 = domain_length * domain_length;
  return std::sqrt(std::numbers::pi * lip_u2_integral / (4.0 * r2)) / (1.0 - nu * nu);
}

std::uint64_t crack_mouth_index(const ProblemSpec& spec) { return spec.dof_index(0, 0, 1); }

double sif_fit(const Eigen::VectorXd& u, const ProblemSpec& spec) {
  require_crack(spec, u);
  const int tip = spec.nodes_x() / 2;
  const double h = spacing(spec);
  const double shape = 2.0 * (1.0 - spec.nu * spec.nu);
  double num = 0.0;
  double den = 0.0;
  for (int x = spec.nodes_x() / 4; x < tip; ++x) {
    const double r = (tip - x) * h;
    const double g = shape * std::sqrt(2.0 * r / std::numbers::pi);
    num += g * u(static_cast<Eigen::Index>(spec.dof_index(x, 0, 1)));
    den += g * g;
  }
  return den > 0.0 ? num / den : 0.0;
}

double sif_integral(const Eigen::VectorXd& u, const ProblemSpec& spec, LipDomain domain) {
  require_crack(spec, u);
  const BCDescriptor sel = lip_selector(spec, domain);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < spec.dimension(); ++i) {
    if (sel.matches(i)) sum += u(static_cast<Eigen::Index>(i)) * u(static_cast<Eigen::Index>(i));
  }
  return sif_from_lip_integral(sum * spacing(spec), lip_length(spec, domain), spec.nu);
}

ClassicalObservables classical_observables(const Eigen::VectorXd& u, const ProblemSpec& spec) {
  require_crack(spec, u);
  ClassicalObservables o;
  o.cod = u(static_cast<Eigen::Index>(crack_mouth_index(spec)));
  o.sif_fit = sif_fit(u, spec);
  o.sif_integral = sif_integral(u, spec, LipDomain::FullLip);
  o.sif_integral_inner =
      spec.nx >= 3 ? sif_integral(u, spec, LipDomain::InnerQuarter) : std::numeric_limits<double>::quiet_NaN();
  return o;
}

}  // namespace qremesh::fem
