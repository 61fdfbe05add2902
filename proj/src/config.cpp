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

#include "polarmimo/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace polarmimo {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

/// key -> (value, line number), insertion order preserved separately for
/// diagnostics.
std::map<std::string, std::pair<std::string, int>> tokenize(
    const std::string& text) {
  std::map<std::string, std::pair<std::string, int>> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key or value");
    }
    if (kv.count(key)) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": duplicate key '" + key + "'");
    }
    kv[key] = {value, lineno};
  }
  return kv;
}

double parse_double(const std::string& key, const std::string& value) {
  if (value == "inf") return 1e12;
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': not a number: '" + value +
                      "'");
  }
}

long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': not an integer: '" + value +
                      "'");
  }
}

std::vector<double> parse_list(const std::string& key,
                               const std::string& value) {
  std::vector<double> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_double(key, trim(item)));
  if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
  return out;
}

}  // namespace

ArrayGeometry ExperimentConfig::geometry() const {
  ArrayGeometry g;
  g.num_antennas = num_antennas;
  g.spacing = spacing_m;
  g.height = height_m;
  g.wavelength = wavelength_m();
  return g;
}

RegionOfInterest ExperimentConfig::roi() const {
  RegionOfInterest r;
  r.rho_min = rho_min_m;
  r.rho_max = rho_max_m;
  r.phi_min = phi_min_deg * M_PI / 180.0;
  r.phi_max = phi_max_deg * M_PI / 180.0;
  return r;
}

ExperimentConfig parse_config_text(const std::string& text) {
  auto kv = tokenize(text);
  ExperimentConfig cfg;
  std::string q_target_raw;

  auto take = [&](const std::string& key) -> const std::string* {
    auto it = kv.find(key);
    if (it == kv.end()) return nullptr;
    static thread_local std::string value;
    value = it->second.first;
    kv.erase(it);
    return &value;
  };
  auto dbl = [&](const std::string& key, double& field) {
    if (const std::string* v = take(key)) field = parse_double(key, *v);
  };
  auto integer = [&](const std::string& key, int& field) {
    if (const std::string* v = take(key)) {
      field = static_cast<int>(parse_int(key, *v));
    }
  };

  dbl("carrier_frequency_hz", cfg.carrier_frequency_hz);
  dbl("bandwidth_hz", cfg.bandwidth_hz);
  integer("num_antennas", cfg.num_antennas);
  dbl("spacing_m", cfg.spacing_m);
  dbl("height_m", cfg.height_m);
  dbl("rho_min_m", cfg.rho_min_m);
  dbl("rho_max_m", cfg.rho_max_m);
  dbl("phi_min_deg", cfg.phi_min_deg);
  dbl("phi_max_deg", cfg.phi_max_deg);
  integer("tau_p", cfg.tau_p);
  integer("num_rf", cfg.num_rf);
  integer("num_ue", cfg.num_ue);
  dbl("power_dbm", cfg.power_dbm);
  if (const std::string* v = take("power_sweep_dbm")) {
    cfg.power_sweep_dbm = parse_list("power_sweep_dbm", *v);
  }
  dbl("noise_dbm", cfg.noise_dbm);
  if (const std::string* v = take("ue_distribution")) cfg.ue_distribution = *v;
  if (const std::string* v = take("q_target")) q_target_raw = *v;
  dbl("baseline_beta", cfg.baseline_beta);
  integer("num_level_curves", cfg.num_level_curves);
  dbl("beta", cfg.beta);
  dbl("max_range_m", cfg.max_range_m);
  integer("nmse_samples", cfg.nmse_samples);
  integer("trials", cfg.trials);
  integer("drops", cfg.drops);
  integer("noise_realizations", cfg.noise_realizations);
  integer("sparsity", cfg.sparsity);
  dbl("prelog", cfg.prelog);
  if (const std::string* v = take("seed")) {
    cfg.seed = static_cast<std::uint64_t>(parse_int("seed", *v));
  }
  dbl("sweep_beta_min", cfg.sweep_beta_min);
  dbl("sweep_beta_max", cfg.sweep_beta_max);
  integer("sweep_beta_count", cfg.sweep_beta_count);

  if (!kv.empty()) {
    std::string msg = "unknown config keys:";
    for (const auto& [key, val] : kv) {
      msg += " '" + key + "' (line " + std::to_string(val.second) + ")";
    }
    throw ConfigError(msg);
  }

  // Defaults that depend on other fields.
  if (cfg.spacing_m == 0.0 && cfg.num_antennas > 0) {
    cfg.spacing_m = 5.0 * cfg.wavelength_m();
  }
  if (cfg.power_sweep_dbm.empty()) {
    for (double p = 0.0; p <= 20.0 + 1e-9; p += 2.5) {
      cfg.power_sweep_dbm.push_back(p);
    }
  }

  // Q target: absolute integer or a multiple of M like "4M".
  if (!q_target_raw.empty()) {
    if (q_target_raw.back() == 'M') {
      const long mult = parse_int(
          "q_target", q_target_raw.substr(0, q_target_raw.size() - 1));
      cfg.q_target = static_cast<int>(mult * cfg.num_antennas);
    } else {
      cfg.q_target = static_cast<int>(parse_int("q_target", q_target_raw));
    }
  }

  // Validation: collect every violation before reporting.
  std::vector<std::string> errs;
  auto require = [&](bool ok, const std::string& msg) {
    if (!ok) errs.push_back(msg);
  };
  require(cfg.num_antennas >= 1, "num_antennas: required, must be >= 1");
  require(cfg.carrier_frequency_hz > 0, "carrier_frequency_hz must be > 0");
  require(cfg.spacing_m > 0, "spacing_m must be > 0");
  require(cfg.height_m >= 0, "height_m must be >= 0");
  require(cfg.rho_min_m > 0, "rho_min_m: required, must be > 0");
  require(cfg.rho_max_m > cfg.rho_min_m,
          "rho_max_m: required, must exceed rho_min_m");
  require(cfg.phi_min_deg >= -90 && cfg.phi_max_deg <= 90 &&
              cfg.phi_min_deg < cfg.phi_max_deg,
          "phi_min_deg/phi_max_deg: required, need -90 <= min < max <= 90");
  require(cfg.tau_p >= 1, "tau_p must be >= 1");
  require(cfg.num_rf >= 1, "num_rf must be >= 1");
  require(cfg.num_ue >= 1, "num_ue must be >= 1");
  require(cfg.q_target > 0, "q_target: required, must resolve to > 0");
  require(cfg.baseline_beta > 0, "baseline_beta: required, must be > 0");
  require(cfg.ue_distribution == "uniform-area",
          "ue_distribution: only 'uniform-area' is supported");
  require(cfg.nmse_samples >= 1, "nmse_samples must be >= 1");
  require(cfg.trials >= 1, "trials must be >= 1");
  require(cfg.drops >= 0, "drops must be >= 0");
  require(cfg.noise_realizations >= 1, "noise_realizations must be >= 1");
  require(cfg.sparsity >= 1 && cfg.sparsity <= 5, "sparsity must be in 1..5");
  require(cfg.prelog > 0 && cfg.prelog <= 1, "prelog must be in (0, 1]");
  require(cfg.sweep_beta_count >= 2 &&
              cfg.sweep_beta_min < cfg.sweep_beta_max &&
              cfg.sweep_beta_min > 0,
          "sweep_beta_* must describe an increasing positive range");
  require((cfg.num_level_curves == 0) == (cfg.beta == 0.0),
          "num_level_curves and beta must be given together (or neither)");
  if (!errs.empty()) {
    std::string msg = "config validation failed:";
    for (const auto& e : errs) msg += "\n  - " + e;
    throw ConfigError(msg);
  }

  const double five_lambda = 5.0 * cfg.wavelength_m();
  if (std::abs(cfg.spacing_m - five_lambda) > 1e-9 * five_lambda) {
    cfg.warnings.push_back(
        "spacing_m is not 5*lambda for the configured carrier frequency");
  }
  return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::uint64_t config_hash(const std::string& text) {
  const auto kv = tokenize(text);
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001B3ULL;
    }
  };
  for (const auto& [key, val] : kv) {
    mix(key);
    mix("=");
    mix(val.first);
    mix("\n");
  }
  return h;
}

}  // namespace polarmimo
