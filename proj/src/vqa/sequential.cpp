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

#include "qremesh/vqa/sequential.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qremesh::vqa {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kGrid = 360;

// a + b cos t + c sin t through samples at t = 0, +2pi/3, -2pi/3.
struct Sinusoid {
  double a = 0.0, b = 0.0, c = 0.0;
  static Sinusoid fit(double v0, double vp, double vm) {
    return {(v0 + vp + vm) / 3.0, (2.0 * v0 - vp - vm) / 3.0, (vp - vm) / std::sqrt(3.0)};
  }
  double operator()(double t) const { return a + b * std::cos(t) + c * std::sin(t); }
};

// p cos(t/2) + q sin(t/2), least squares over the same three samples.
struct HalfSinusoid {
  double p = 0.0, q = 0.0;
  static HalfSinusoid fit(double v0, double vp, double vm) {
    const double ts[3] = {0.0, 2.0 * kPi / 3.0, -2.0 * kPi / 3.0};
    const double vs[3] = {v0, vp, vm};
    double cc = 0, cs = 0, ss = 0, cv = 0, sv = 0;
    for (int k = 0; k < 3; ++k) {
      const double c = std::cos(ts[k] / 2), s = std::sin(ts[k] / 2);
      cc += c * c;
      cs += c * s;
      ss += s * s;
      cv += c * vs[k];
      sv += s * vs[k];
    }
    const double det = cc * ss - cs * cs;
    return {(cv * ss - sv * cs) / det, (sv * cc - cv * cs) / det};
  }
  double operator()(double t) const { return p * std::cos(t / 2) + q * std::sin(t / 2); }
};

// Grid search then golden-section refinement on the bracketing cells.
template <class F>
double argmin_periodic(const F& model, double period) {
  double best_t = 0.0, best_v = model(0.0);
  const double h = period / kGrid;
  for (int k = 1; k < kGrid; ++k) {
    const double t = -period / 2 + k * h;
    const double v = model(t);
    if (v < best_v) best_v = v, best_t = t;
  }
  double lo = best_t - h, hi = best_t + h;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = model(x1), f2 = model(x2);
  for (int i = 0; i < 60; ++i) {
    if (f1 < f2) {
      hi = x2, x2 = x1, f2 = f1;
      x1 = hi - g * (hi - lo), f1 = model(x1);
    } else {
      lo = x1, x1 = x2, f1 = f2;
      x2 = lo + g * (hi - lo), f2 = model(x2);
    }
  }
  const double t = f1 < f2 ? x1 : x2;
  return model(t) < best_v ? t : best_t;
}

}  // namespace

OptimizeResult optimize_sequential(const PartsFunction& parts, CostKind kind, std::vector<double> x0,
                                   const OptimizerConfig& cfg, const std::function<void(int)>& on_iteration) {
  validate(cfg);
  if (x0.empty()) throw std::invalid_argument("optimize needs at least one parameter");
  const std::size_t d = x0.size();
  std::size_t used = 0;
  auto exhausted = [&] { return cfg.max_evaluations && used >= *cfg.max_evaluations; };
  auto eval = [&](const std::vector<double>& x) {
    ++used;
    CostParts p = parts(x);
    if (!std::isfinite(p.cost)) p.cost = std::numeric_limits<double>::infinity();
    return p;
  };

  OptimizeResult res;
  res.algorithm = std::string(to_string(OptimizerAlgorithm::SequentialSinusoid));
  if (on_iteration) on_iteration(0);
  std::vector<double> x = std::move(x0);
  CostParts here = eval(x);
  res.theta = x;
  res.initial_cost = res.best_cost = here.cost;
  res.trace.push_back({0, res.best_cost, used});

  int it = 0;
  double sweep_start = res.best_cost;
  res.status = StopReason::IterationCap;
  for (std::size_t i = 0;; i = (i + 1) % d) {
    if (i == 0 && it > 0) {
      if (sweep_start - res.best_cost <= cfg.absolute_tolerance + cfg.relative_tolerance * std::abs(res.best_cost)) {
        res.status = StopReason::Converged;
        break;
      }
      sweep_start = res.best_cost;
    }
    if (it >= cfg.max_iterations) break;
    if (exhausted()) {
      res.status = StopReason::EvaluationCap;
      break;
    }
    ++it;
    if (on_iteration) on_iteration(it);

    const double t0 = x[i];
    x[i] = t0 + 2.0 * kPi / 3.0;
    const CostParts plus = eval(x);
    if (exhausted()) {
      x[i] = t0;
      res.status = StopReason::EvaluationCap;
      break;
    }
    x[i] = t0 - 2.0 * kPi / 3.0;
    const CostParts minus = eval(x);

    const Sinusoid stiff = Sinusoid::fit(here.stiffness, plus.stiffness, minus.stiffness);
    double step = 0.0;
    if (kind == CostKind::Quotient) {
      const Sinusoid num = Sinusoid::fit(here.overlap_sq, plus.overlap_sq, minus.overlap_sq);
      step = argmin_periodic(
          [&](double t) {
            const double e = stiff(t);
            return e > kQuotientFloor ? -std::max(num(t), 0.0) / (2.0 * e) : std::numeric_limits<double>::infinity();
          },
          2.0 * kPi);
    } else {
      const HalfSinusoid ov = HalfSinusoid::fit(here.overlap, plus.overlap, minus.overlap);
      step = argmin_periodic([&](double t) { return 0.5 * stiff(t) - ov(t); }, 4.0 * kPi);
    }

    // Keep the best of the three probes unless the model's minimum is
    // confirmed by a fresh evaluation.
    CostParts best = here;
    double best_t = t0;
    if (plus.cost < best.cost) best = plus, best_t = t0 + 2.0 * kPi / 3.0;
    if (minus.cost < best.cost) best = minus, best_t = t0 - 2.0 * kPi / 3.0;
    if (!exhausted()) {
      x[i] = t0 + step;
      const CostParts moved = eval(x);
      if (moved.cost < best.cost) best = moved, best_t = t0 + step;
    }
    x[i] = std::remainder(best_t, 4.0 * kPi);
    here = best;
    if (here.cost < res.best_cost) {
      res.best_cost = here.cost;
      res.theta = x;
    }
    res.trace.push_back({it, res.best_cost, used});
  }
  res.iterations = it;
  res.evaluations = used;
  if (res.trace.back().evaluations != used) res.trace.push_back({it, res.best_cost, used});
  return res;
}

}  // namespace qremesh::vqa
