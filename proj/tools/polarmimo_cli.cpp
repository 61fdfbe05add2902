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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polarmimo/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"polarmimo: polar-domain dictionary design simulator"};

  std::string config_path;
  std::string experiment;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool force = false;

  app.add_option("--config", config_path, "configuration file (key = value)")
      ->required();
  app.add_option("--experiment", experiment,
                 "one of: coherence-sweep, level-curves, grid-export, "
                 "design-surface, nmse-vs-power, se-vs-power")
      ->required();
  app.add_option("--seed", seed, "master seed (overrides the config)")
      ->each([&](const std::string&) { seed_given = true; });
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--force", force, "overwrite a differing previous run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
      throw polarmimo::ConfigError("cannot open config file: " + config_path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string config_text = buf.str();
    const polarmimo::ExperimentConfig cfg =
        polarmimo::parse_config_text(config_text);
    for (const std::string& w : cfg.warnings) {
      std::cerr << "warning: " << w << "\n";
    }
    if (!seed_given) seed = cfg.seed;

    const std::vector<std::string> files = polarmimo::run_experiment(
        experiment, cfg, config_text, seed, out_dir, force);
    for (const std::string& f : files) {
      std::cout << out_dir << "/" << f << "\n";
    }
    return 0;
  } catch (const polarmimo::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
