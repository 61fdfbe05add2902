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

#ifndef POLARMIMO_EXPERIMENTS_HPP
#define POLARMIMO_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "polarmimo/config.hpp"

namespace polarmimo {

/// Names accepted by run_experiment.
const std::vector<std::string>& experiment_names();

/// Runs one named experiment, writing its CSV artifacts plus manifest.json
/// into out_dir (created if missing). config_text is the raw config file
/// content (hashed into the manifest). seed overrides the config seed.
/// Refuses to overwrite an out_dir whose manifest records a different
/// experiment/config/seed unless force is set.
///
/// Returns the list of files written. Throws ConfigError for configuration
/// problems and std::runtime_error for runtime failures.
std::vector<std::string> run_experiment(const std::string& name,
                                        const ExperimentConfig& cfg,
                                        const std::string& config_text,
                                        std::uint64_t seed,
                                        const std::string& out_dir,
                                        bool force);

}  // namespace polarmimo

#endif  // POLARMIMO_EXPERIMENTS_HPP
