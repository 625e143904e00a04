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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "qremesh/cli/commands.hpp"
#include "qremesh/decomp/operator_builder.hpp"
#include "qremesh/io/config.hpp"
#include "qremesh/io/serialize.hpp"

namespace qremesh {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("qremesh_test_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

io::RunConfig small_config(const fs::path& out) {
  io::RunConfig cfg = io::default_config();
  cfg.output_dir = out.string();
  cfg.schedule.stages = {{1, 120}, {1, 120}};
  cfg.seed = 11;
  return cfg;
}

TEST(Config, ParseAppliesValues) {
  const json doc = json::parse(R"({
    "problem": {"model": "half_plate_crack", "nx": 3, "ny": 2, "nu": 0.25},
    "schedule": {"stages": [{"layers": 3, "max_evaluations": 500}]},
    "optimizer": {"algorithm": "sequential-sinusoid"},
    "shots": {"shots": 1000, "mitigation_threshold": 0.001},
    "seed": 42, "layout": "swapless", "cold_start_arm": true
  })");
  const auto cfg = io::parse_config(doc);
  EXPECT_EQ(cfg.problem.nx, 3);
  EXPECT_EQ(cfg.problem.nu, 0.25);
  ASSERT_EQ(cfg.schedule.stages.size(), 1u);
  EXPECT_EQ(cfg.schedule.stages[0].layers, 3);
  EXPECT_EQ(cfg.optimizer.algorithm, vqa::OptimizerAlgorithm::SequentialSinusoid);
  EXPECT_EQ(*cfg.shots.shots, 1000u);
  EXPECT_EQ(cfg.shots.seed, 42u);
  EXPECT_EQ(cfg.layout, remesh::LayoutMode::Swapless);
  EXPECT_TRUE(cfg.cold_start_arm);
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(io::parse_config(json::parse(R"({"problme": {}})")), fem::InvalidProblem);
  EXPECT_THROW(io::parse_config(json::parse(R"({"problem": {"nx": 2, "colour": 1}})")), fem::InvalidProblem);
  EXPECT_THROW(io::parse_config(json::parse(R"({"layout": "diagonal"})")), fem::InvalidProblem);
  EXPECT_THROW(io::parse_config(json::parse(R"({"problem": {"model": "beam"}})")), fem::InvalidProblem);
  auto cfg = io::default_config();
  cfg.problem.nu = 0.5;
  EXPECT_THROW(io::validate(cfg), fem::InvalidProblem);
}

TEST(Config, RoundTrip) {
  auto cfg = io::default_config();
  cfg.seed = 77;
  cfg.shots = qsim::ShotConfig::with_shots(256, 77);
  cfg.schedule.stages.push_back({4, 900});
  const json a = io::to_json(cfg);
  const json b = io::to_json(io::parse_config(a));
  EXPECT_EQ(a, b);
}

TEST(Verify, PassesOnDefaultAndZeroPoisson) {
  auto spec = fem::make_problem(fem::Model::HalfPlateCrack, 2, 2, 0.3);
  EXPECT_TRUE(cli::verify_problem(spec, 1).passed());
  spec = fem::make_problem(fem::Model::HalfPlateCrack, 3, 2, 0.0);
  const auto r = cli::verify_problem(spec, 2);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
}

TEST(Verify, CorruptedCoefficientNamesTheInvariant) {
  const auto spec = fem::make_problem(fem::Model::HalfPlateCrack, 2, 2, 0.3);
  const auto K = decomp::build_operator(spec);
  std::vector<core::TensorTerm> terms(K.terms().begin(), K.terms().end());
  terms[3].coefficient *= 1.001;
  core::OperatorSum bad(K.num_qubits(), terms);
  bad.set_hermitian(true);
  const auto r = cli::verify_operator(spec, bad, 1);
  EXPECT_FALSE(r.passed());
  bool named = false;
  for (const auto& c : r.checks) named |= (c.name == "decomposition_matches_assembly" && !c.passed);
  EXPECT_TRUE(named);
}

TEST(Cli, SolveClassicalZeroLoadWritesZeros) {
  TempDir tmp;
  auto cfg = small_config(tmp.path());
  cfg.problem.load_density = 0.0;
  std::ostringstream log;
  ASSERT_EQ(cli::cmd_solve_classical(cfg, log), 0);
  std::ifstream in(tmp.path() / "solution.csv");
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "node,x,y,u_x,u_y");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.rfind(',', line.rfind(',') - 1)), ",0,0") << line;
  }
  EXPECT_EQ(rows, 16);
}

TEST(Cli, OutputsAreByteIdenticalAcrossRuns) {
  TempDir a, b;
  std::ostringstream log;
  for (auto* cmd : {&cli::cmd_solve_classical, &cli::cmd_decompose_dump, &cli::cmd_verify}) {
    ASSERT_EQ((*cmd)(small_config(a.path()), log), 0);
    ASSERT_EQ((*cmd)(small_config(b.path()), log), 0);
  }
  for (const char* f : {"solution.csv", "observables.json", "terms.json", "groups.json", "verify.json"}) {
    EXPECT_EQ(slurp(a.path() / f), slurp(b.path() / f)) << f;
    EXPECT_FALSE(slurp(a.path() / f).empty()) << f;
  }
}

TEST(Cli, CascadeWritesStagesAndReplaysFromManifest) {
  TempDir a, b;
  auto cfg = small_config(a.path());
  cfg.cold_start_arm = true;
  std::ostringstream log;
  ASSERT_EQ(cli::cmd_cascade(cfg, log), 0);
  for (const char* f : {"stage_0/trace.csv", "stage_0/report.json", "stage_1/trace.csv", "stage_1/report.json",
                        "cold/stage_1/report.json", "manifest.json"}) {
    EXPECT_TRUE(fs::exists(a.path() / f)) << f;
  }
  const json manifest = json::parse(slurp(a.path() / "manifest.json"));
  EXPECT_EQ(manifest["qubits"], json::array({5, 7}));
  EXPECT_EQ(json::parse(slurp(a.path() / "cold/stage_1/report.json"))["num_qubits"], 7);

  auto replay = io::parse_config(manifest);
  replay.output_dir = b.path().string();
  ASSERT_EQ(cli::cmd_cascade(replay, log), 0);
  for (const char* f : {"stage_0/trace.csv", "stage_1/trace.csv", "cold/stage_1/trace.csv"}) {
    EXPECT_EQ(slurp(a.path() / f), slurp(b.path() / f)) << f;
  }
}

TEST(Cli, VqaRunAndObservables) {
  TempDir tmp;
  auto cfg = small_config(tmp.path());
  std::ostringstream log;
  ASSERT_EQ(cli::cmd_vqa_run(cfg, log), 0);
  EXPECT_EQ(slurp(tmp.path() / "trace.csv").substr(0, 31), "iteration,best_cost,evaluations");
  cfg.shots = qsim::ShotConfig::with_shots(500, 3);
  ASSERT_EQ(cli::cmd_observables(cfg, log), 0);
  const json counts = json::parse(slurp(tmp.path() / "counts.json"));
  EXPECT_EQ(counts["schema"], io::kCountsSchema);
}

}  // namespace
}  // namespace qremesh
