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

#ifndef POLARMIMO_CONFIG_HPP
#define POLARMIMO_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarmimo/geometry.hpp"

namespace polarmimo {

/// Raised for malformed or invalid configuration input. Mapped to exit
/// code 1 by the CLI.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Full experiment configuration (plain key = value text file, '#' comments,
/// unknown keys rejected). All values are stored in linear SI units except
/// the dBm fields, which keep their conventional unit.
struct ExperimentConfig {
  // System (Table-I style) parameters.
  double carrier_frequency_hz = 300e9;
  double bandwidth_hz = 10e6;  // informational
  int num_antennas = 0;        // M, required
  double spacing_m = 0.0;      // delta, default 5*lambda
  double height_m = 0.0;       // b, required
  double rho_min_m = 0.0;      // required
  double rho_max_m = 0.0;      // required
  double phi_min_deg = 0.0;    // required
  double phi_max_deg = 0.0;    // required

  // Channel estimation (Table-II style) parameters.
  int tau_p = 10;
  int num_rf = 10;
  int num_ue = 10;
  double power_dbm = 15.0;
  std::vector<double> power_sweep_dbm;  // default 0:2.5:20
  double noise_dbm = -86.0;
  std::string ue_distribution = "uniform-area";
  int q_target = 0;  // resolved from "4M"-style or absolute spec, required

  // Dictionary designs under comparison.
  double baseline_beta = 0.0;  // required
  int num_level_curves = 0;    // 0 = run the design search
  double beta = 0.0;           // 0 = run the design search
  double max_range_m = 0.0;    // 0 = default R0; "inf" accepted

  // Monte-Carlo controls.
  int nmse_samples = 2000;
  int trials = 2000;
  int drops = 100;
  int noise_realizations = 50;
  int sparsity = 1;
  double prelog = 1.0;
  std::uint64_t seed = 1;

  // coherence-sweep controls.
  double sweep_beta_min = 0.5;
  double sweep_beta_max = 3.0;
  int sweep_beta_count = 26;

  // Non-fatal validation findings (e.g. spacing/wavelength mismatch).
  std::vector<std::string> warnings;

  double wavelength_m() const { return 299792458.0 / carrier_frequency_hz; }
  double power_w(double dbm) const { return std::pow(10.0, (dbm - 30) / 10); }
  double noise_w() const { return power_w(noise_dbm); }

  ArrayGeometry geometry() const;
  RegionOfInterest roi() const;
};

/// Parse + validate. Throws ConfigError with line/key diagnostics; all
/// validation violations are reported in one message.
ExperimentConfig parse_config(const std::string& path);

/// Parse from in-memory text (used by tests and parse_config).
ExperimentConfig parse_config_text(const std::string& text);

/// FNV-1a hash of the canonicalized (sorted key=value) configuration,
/// independent of comments and whitespace.
std::uint64_t config_hash(const std::string& text);

}  // namespace polarmimo

#endif  // POLARMIMO_CONFIG_HPP
