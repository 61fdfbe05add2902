// SPDX-License-Identifier: Apache-2.0
//
// polarmimo: polar-domain dictionary design and near-field channel estimation
// for elevated base stations
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polarmimo/experiments.hpp"

using namespace polarmimo;
namespace fs = std::filesystem;

namespace {

// A small pinned design so no search runs and everything stays fast.
const char* kTiny =
    "num_antennas = 33\n"
    "height_m = 15\n"
    "rho_min_m = 5\n"
    "rho_max_m = 25\n"
    "phi_min_deg = -60\n"
    "phi_max_deg = 60\n"
    "q_target = 200\n"
    "baseline_beta = 2.5\n"
    "num_level_curves = 40\n"
    "beta = 0.5\n"
    "sweep_beta_min = 0.5\n"
    "sweep_beta_max = 1.4\n"
    "sweep_beta_count = 4\n";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           fs::path("polarmimo_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("experiment names are the documented set") {
  const auto& names = experiment_names();
  REQUIRE(names.size() == 6);
  CHECK(names[0] == "coherence-sweep");
  CHECK(names[1] == "level-curves");
  CHECK(names[2] == "grid-export");
  CHECK(names[3] == "design-surface");
  CHECK(names[4] == "nmse-vs-power");
  CHECK(names[5] == "se-vs-power");
}

TEST_CASE("unknown experiment is a configuration error") {
  TempDir tmp;
  const ExperimentConfig cfg = parse_config_text(kTiny);
  CHECK_THROWS_AS(
      run_experiment("no-such-thing", cfg, kTiny, 1, tmp.path.string(), false),
      ConfigError);
}

TEST_CASE("grid-export writes both grids plus a manifest") {
  TempDir tmp;
  const ExperimentConfig cfg = parse_config_text(kTiny);
  const auto files =
      run_experiment("grid-export", cfg, kTiny, 7, tmp.path.string(), false);

  CHECK(fs::exists(tmp.path / "grid_proposed.csv"));
  CHECK(fs::exists(tmp.path / "grid_baseline.csv"));
  CHECK(fs::exists(tmp.path / "manifest.json"));
  CHECK(files.size() == 3);

  const std::string proposed = slurp(tmp.path / "grid_proposed.csv");
  CHECK(proposed.rfind("k,n,gamma,R,x,y,z\n", 0) == 0);

  const std::string manifest = slurp(tmp.path / "manifest.json");
  CHECK(manifest.find("\"experiment\": \"grid-export\"") != std::string::npos);
  CHECK(manifest.find("\"seed\": 7") != std::string::npos);
  CHECK(manifest.find("\"config_hash\"") != std::string::npos);
  CHECK(manifest.find("\"designs\"") != std::string::npos);
}

TEST_CASE("rerun guard: same run overwrites, different run needs --force") {
  TempDir tmp;
  const ExperimentConfig cfg = parse_config_text(kTiny);
  const std::string dir = tmp.path.string();
  run_experiment("grid-export", cfg, kTiny, 7, dir, false);

  // Identical rerun is allowed and idempotent.
  CHECK_NOTHROW(run_experiment("grid-export", cfg, kTiny, 7, dir, false));

  // A different seed in the same directory is refused...
  CHECK_THROWS_AS(run_experiment("grid-export", cfg, kTiny, 8, dir, false),
                  std::runtime_error);
  // ...as is a different experiment...
  CHECK_THROWS_AS(run_experiment("coherence-sweep", cfg, kTiny, 7, dir, false),
                  std::runtime_error);
  // ...unless forced.
  CHECK_NOTHROW(run_experiment("grid-export", cfg, kTiny, 8, dir, true));
  const std::string manifest = slurp(tmp.path / "manifest.json");
  CHECK(manifest.find("\"seed\": 8") != std::string::npos);
}

TEST_CASE("coherence-sweep CSV shape") {
  TempDir tmp;
  const ExperimentConfig cfg = parse_config_text(kTiny);
  run_experiment("coherence-sweep", cfg, kTiny, 1, tmp.path.string(), false);
  std::ifstream in(tmp.path / "coherence_sweep.csv");
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "beta,q,mu");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == cfg.sweep_beta_count);
}

TEST_CASE("fixed seed reproduces byte-identical artifacts") {
  TempDir a, b;
  const ExperimentConfig cfg = parse_config_text(kTiny);
  run_experiment("level-curves", cfg, kTiny, 11, a.path.string(), false);
  run_experiment("level-curves", cfg, kTiny, 11, b.path.string(), false);
  CHECK(slurp(a.path / "level_curves.csv") == slurp(b.path / "level_curves.csv"));
}
