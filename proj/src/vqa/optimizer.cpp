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

#include "qremesh/vqa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qremesh::vqa {

namespace {

using Point = std::vector<double>;

class Budget {
 public:
  Budget(const CostFunction& f, const OptimizerConfig& cfg) : f_(f), cap_(cfg.max_evaluations) {}

  bool exhausted() const { return cap_ && used_ >= *cap_; }
  std::size_t used() const { return used_; }

  double operator()(const Point& x) {
    ++used_;
    const double v = f_(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  }

 private:
  const CostFunction& f_;
  std::optional<std::size_t> cap_;
  std::size_t used_ = 0;
};

Point affine(const Point& a, const Point& b, double t) {  // a + t (b - a)
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
  return r;
}

}  // namespace

void validate(const OptimizerConfig& cfg) {
  if (cfg.max_iterations < 0) throw std::invalid_argument("max_iterations must be >= 0");
  if (cfg.absolute_tolerance < 0.0 || cfg.relative_tolerance < 0.0) {
    throw std::invalid_argument("optimizer tolerances must be >= 0");
  }
  if (cfg.initial_spread < 0.0) throw std::invalid_argument("initial_spread must be >= 0");
  if (!(cfg.initial_step > 0.0)) throw std::invalid_argument("initial_step must be positive");
  if (cfg.restarts < 0) throw std::invalid_argument("restarts must be >= 0");
  if (cfg.max_evaluations && *cfg.max_evaluations == 0) throw std::invalid_argument("max_evaluations must be positive");
}

std::string_view to_string(OptimizerAlgorithm a) {
  return a == OptimizerAlgorithm::NelderMead ? "nelder-mead-adaptive" : "sequential-sinusoid";
}

std::optional<OptimizerAlgorithm> parse_algorithm(std::string_view s) {
  for (auto a : {OptimizerAlgorithm::NelderMead, OptimizerAlgorithm::SequentialSinusoid}) {
    if (to_string(a) == s) return a;
  }
  return std::nullopt;
}

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::Converged:
      return "converged";
    case StopReason::IterationCap:
      return "iteration_cap";
    case StopReason::EvaluationCap:
      return "evaluation_cap";
  }
  return "?";
}

OptimizeResult optimize(const CostFunction& cost, std::vector<double> x0, const OptimizerConfig& cfg,
                        const std::function<void(int)>& on_iteration) {
  validate(cfg);
  if (x0.empty()) throw std::invalid_argument("optimize needs at least one parameter");
  const std::size_t d = x0.size();
  const double dn = static_cast<double>(d);
  // Dimension-adaptive coefficients (Gao and Han).
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / dn;
  const double contract = 0.75 - 1.0 / (2.0 * dn);
  const double shrink = 1.0 - 1.0 / dn;

  Budget f(cost, cfg);
  OptimizeResult res;
  if (on_iteration) on_iteration(0);
  res.theta = x0;
  res.initial_cost = res.best_cost = f(x0);
  res.trace.push_back({0, res.best_cost, f.used()});

  std::vector<Point> simplex;
  std::vector<double> values;
  auto build_simplex = [&](const Point& center, double center_value, double step) {
    simplex.assign(1, center);
    values.assign(1, center_value);
    for (std::size_t i = 0; i < d && !f.exhausted(); ++i) {
      Point p = center;
      p[i] += step;
      values.push_back(f(p));
      simplex.push_back(std::move(p));
    }
  };
  auto note_best = [&]() {
    const auto it = std::min_element(values.begin(), values.end());
    if (*it < res.best_cost) {
      res.best_cost = *it;
      res.theta = simplex[static_cast<std::size_t>(it - values.begin())];
    }
  };

  int restarts_left = cfg.restarts;
  double step = cfg.initial_step;
  build_simplex(x0, res.initial_cost, step);
  note_best();

  std::vector<std::size_t> order(d + 1);
  int it = 0;
  while (true) {
    if (simplex.size() < d + 1 || f.exhausted()) {
      res.status = StopReason::EvaluationCap;
      break;
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const double fbest = values[order.front()];
    const double fworst = values[order.back()];
    if (fworst - fbest <= cfg.absolute_tolerance + cfg.relative_tolerance * std::abs(fbest)) {
      if (restarts_left > 0 && it < cfg.max_iterations) {
        --restarts_left;
        step *= 0.5;
        build_simplex(res.theta, res.best_cost, step);
        note_best();
        continue;
      }
      res.status = StopReason::Converged;
      break;
    }
    if (it >= cfg.max_iterations) {
      res.status = StopReason::IterationCap;
      break;
    }
    ++it;
    if (on_iteration) on_iteration(it);

    const std::size_t worst = order.back();
    const std::size_t second = order[d - 1];
    Point centroid(d, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
      const Point& p = simplex[order[k]];
      for (std::size_t i = 0; i < d; ++i) centroid[i] += p[i] / dn;
    }

    const Point xr = affine(centroid, simplex[worst], -reflect);
    const double fr = f(xr);
    bool do_shrink = false;
    if (fr < fbest) {
      const Point xe = affine(centroid, xr, expand);
      const double fe = f.exhausted() ? std::numeric_limits<double>::infinity() : f(xe);
      if (fe < fr) {
        simplex[worst] = xe;
        values[worst] = fe;
      } else {
        simplex[worst] = xr;
        values[worst] = fr;
      }
    } else if (fr < values[second]) {
      simplex[worst] = xr;
      values[worst] = fr;
    } else if (!f.exhausted()) {
      const bool outside = fr < values[worst];
      const Point xc = outside ? affine(centroid, xr, contract) : affine(centroid, simplex[worst], contract);
      const double fc = f(xc);
      if (fc < (outside ? fr : values[worst])) {
        simplex[worst] = xc;
        values[worst] = fc;
      } else {
        do_shrink = true;
      }
    }
    if (do_shrink) {
      const std::size_t b = order.front();
      for (std::size_t k = 0; k <= d && !f.exhausted(); ++k) {
        if (k == b) continue;
        simplex[k] = affine(simplex[b], simplex[k], shrink);
        values[k] = f(simplex[k]);
      }
    }
    note_best();
    res.trace.push_back({it, res.best_cost, f.used()});
  }
  res.iterations = it;
  res.evaluations = f.used();
  if (res.trace.back().evaluations != res.evaluations) res.trace.push_back({it, res.best_cost, res.evaluations});
  return res;
}

}  // namespace qremesh::vqa
