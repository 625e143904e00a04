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

// qremesh command-line front-end. Every command reads an optional JSON
// config; flags override the matching config fields.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qremesh/cli/commands.hpp"
#include "qremesh/io/config.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string shots;
  std::optional<double> mitigation_threshold;
  bool cold_start_arm = false;
  std::string out;
};

qremesh::io::RunConfig resolve(const Overrides& o) {
  using qremesh::io::RunConfig;
  RunConfig cfg = o.config_path.empty() ? qremesh::io::default_config() : qremesh::io::load_config(o.config_path);
  if (o.seed) {
    cfg.seed = *o.seed;
    cfg.optimizer.seed = *o.seed;
    cfg.shots.seed = *o.seed;
  }
  if (!o.shots.empty()) {
    if (o.shots == "exact") {
      cfg.shots.shots.reset();
    } else {
      std::size_t pos = 0;
      unsigned long long n = 0;
      try {
        n = std::stoull(o.shots, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != o.shots.size() || n == 0) {
        throw qremesh::fem::InvalidProblem("--shots must be 'exact' or a positive integer");
      }
      cfg.shots.shots = n;
    }
  }
  if (o.mitigation_threshold) cfg.shots.mitigation_threshold = *o.mitigation_threshold;
  if (o.cold_start_arm) cfg.cold_start_arm = true;
  if (!o.out.empty()) cfg.output_dir = o.out;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qremesh: variational FEM solver with quantum remeshing"};
  app.require_subcommand(1);
  Overrides o;
  std::uint64_t seed = 0;
  double threshold = 0.0;

  for (const auto& info : qremesh::cli::commands()) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    sub->add_option("--config", o.config_path, "JSON config or replay manifest")->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "root seed");
    sub->add_option("--shots", o.shots, "'exact' or a shot count");
    sub->add_option("--mitigation-threshold", threshold, "zero outcome probabilities below this value");
    sub->add_flag("--cold-start-arm", o.cold_start_arm, "add the cold-start comparison arm");
    sub->add_option("--out", o.out, "output directory");
  }
  CLI11_PARSE(app, argc, argv);

  for (const auto& info : qremesh::cli::commands()) {
    CLI::App* sub = app.get_subcommand(info.name);
    if (!sub->parsed()) continue;
    if (sub->count("--seed")) o.seed = seed;
    if (sub->count("--mitigation-threshold")) o.mitigation_threshold = threshold;
    try {
      return info.run(resolve(o), std::cout);
    } catch (const std::exception& e) {
      std::cerr << "qremesh " << info.name << ": " << e.what() << '\n';
      return 2;
    }
  }
  return 1;
}
