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

#include "polarmimo/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "polarmimo/design.hpp"
#include "polarmimo/evaluation.hpp"

namespace polarmimo {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kCodeVersion = "polarmimo 1.0.0";

// Named RNG sub-stream bases so every experiment stage draws from an
// independent, order-insensitive stream of the master seed.
constexpr std::uint64_t kStreamDesign = 0x10000;
constexpr std::uint64_t kStreamProbes = 0x20000;
constexpr std::uint64_t kStreamTrial = 0x30000;
constexpr std::uint64_t kStreamDrop = 0x40000;

std::string format_row(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("short write to " + path.string());
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

/// The two dictionary designs every comparison experiment uses.
struct DesignPair {
  PolarGrid baseline;
  PolarGrid proposed;
  int proposed_curves = 0;
  double proposed_beta = 0.0;
  bool searched = false;
};

DesignPair resolve_designs(const ExperimentConfig& cfg, Rng& master,
                           json& manifest) {
  const ArrayGeometry geom = cfg.geometry();
  const RegionOfInterest roi = cfg.roi();
  DesignPair d;
  d.baseline = build_baseline_grid(cfg.baseline_beta, geom, roi);
  if (cfg.num_level_curves > 0) {
    d.proposed_curves = cfg.num_level_curves;
    d.proposed_beta = cfg.beta;
  } else {
    Rng rng = master.stream(kStreamDesign);
    const DesignResult res =
        optimize_design(cfg.q_target, geom, roi, cfg.nmse_samples, rng);
    d.proposed_curves = res.winner.num_level_curves;
    d.proposed_beta = res.winner.beta;
    d.searched = true;
  }
  GridDesignParams params;
  params.target_q = cfg.q_target;
  params.num_level_curves = d.proposed_curves;
  params.beta = d.proposed_beta;
  if (cfg.max_range_m > 0.0) params.max_range = cfg.max_range_m;
  d.proposed = build_proposed_grid(params, geom, roi);
  manifest["designs"] = {
      {"baseline", {{"beta", cfg.baseline_beta}, {"q", d.baseline.size()}}},
      {"proposed",
       {{"num_level_curves", d.proposed_curves},
        {"beta", d.proposed_beta},
        {"q", d.proposed.size()},
        {"from_search", d.searched}}}};
  return d;
}

// ---- individual experiments -------------------------------------------

std::string run_coherence_sweep(const ExperimentConfig& cfg) {
  const ArrayGeometry geom = cfg.geometry();
  const RegionOfInterest roi = cfg.roi();
  std::string csv = "beta,q,mu\n";
  for (int i = 0; i < cfg.sweep_beta_count; ++i) {
    const double beta =
        cfg.sweep_beta_min + (cfg.sweep_beta_max - cfg.sweep_beta_min) * i /
                                 (cfg.sweep_beta_count - 1);
    const PolarGrid grid = build_baseline_grid(beta, geom, roi);
    const double mu = mutual_coherence(assemble_dictionary(grid, geom));
    csv += format_row("%.9g,%d,%.9g\n", beta, grid.size(), mu);
  }
  return csv;
}

std::string run_level_curves(const ExperimentConfig& cfg) {
  const ArrayGeometry geom = cfg.geometry();
  const RegionOfInterest roi = cfg.roi();
  const int n_curves = cfg.num_level_curves > 0 ? cfg.num_level_curves : 9;
  const std::vector<double> gammas =
      level_curve_values(n_curves, gamma_max(roi, geom.height));
  constexpr int kTraceSamples = 201;
  std::string csv = "k,gamma,rho,phi,x,y\n";
  for (int k = 0; k < n_curves; ++k) {
    for (int i = 0; i < kTraceSamples; ++i) {
      const double rho = roi.rho_min + (roi.rho_max - roi.rho_min) * i /
                                           (kTraceSamples - 1);
      // Invert gamma = sqrt(1 - (b/R)^2) sin(phi) at fixed gamma, rho.
      const double s =
          gammas[k] * std::sqrt(rho * rho + geom.height * geom.height) / rho;
      if (std::abs(s) > 1.0) continue;
      const double phi = std::asin(s);
      if (phi < roi.phi_min || phi > roi.phi_max) continue;
      csv += format_row("%d,%.9g,%.9g,%.9g,%.9g,%.9g\n", k, gammas[k], rho,
                        phi, rho * std::cos(phi), rho * std::sin(phi));
    }
  }
  return csv;
}

std::string run_design_surface(const ExperimentConfig& cfg, Rng& master,
                               json& manifest) {
  const ArrayGeometry geom = cfg.geometry();
  const RegionOfInterest roi = cfg.roi();
  Rng rng = master.stream(kStreamDesign);
  const DesignResult res =
      optimize_design(cfg.q_target, geom, roi, cfg.nmse_samples, rng);
  std::string csv = "n_gamma,beta,q,nmse_opt_db\n";
  int unreachable = 0;
  for (const DesignCandidate& c : res.trace) {
    if (!c.reachable) {
      ++unreachable;
      continue;
    }
    csv += format_row("%d,%.9g,%d,%.9g\n", c.num_level_curves, c.beta, c.q,
                      to_db(c.nmse));
  }
  manifest["winner"] = {{"num_level_curves", res.winner.num_level_curves},
                        {"beta", res.winner.beta},
                        {"q", res.winner.q},
                        {"nmse_opt_db", to_db(res.winner.nmse)}};
  manifest["unreachable_candidates"] = unreachable;
  return csv;
}

/// Delta-method standard error of 10*log10(mean err).
std::string result_row(double p_dbm, const char* design, const char* metric,
                       const Aggregate& lin) {
  const double db = to_db(lin.mean);
  const double db_err = 10.0 / std::log(10.0) * lin.stderr / lin.mean;
  return format_row("%.9g,%s,%s,%.9g,%.9g\n", p_dbm, design, metric, db,
                    db_err);
}

std::string run_nmse_vs_power(const ExperimentConfig& cfg, Rng& master) {
  const ArrayGeometry geom = cfg.geometry();
  const RegionOfInterest roi = cfg.roi();
  json scratch;
  const DesignPair designs = resolve_designs(cfg, master, scratch);
  const Dictionary dicts[2] = {assemble_dictionary(designs.baseline, geom),
                               assemble_dictionary(designs.proposed, geom)};
  const char* names[2] = {"baseline", "proposed"};
  const std::vector<double>& powers = cfg.power_sweep_dbm;

  // err[design][power][trial], common random numbers across designs and
  // powers: the combiner, UE position, and noise are drawn once per trial.
  std::vector<std::vector<std::vector<double>>> err(
      2, std::vector<std::vector<double>>(powers.size()));
  PilotParams pp;
  pp.num_ue = cfg.num_ue;
  pp.num_rf = cfg.num_rf;
  pp.num_slots = cfg.tau_p;
  pp.noise_w = cfg.noise_w();
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = master.stream(kStreamTrial + t);
    const Eigen::MatrixXd comb =
        generate_combiners(geom, pp.num_rf, pp.num_slots, rng);
    const ScenePoint ue =
        sample_ue_positions(roi, geom.height, 1, rng)[0];
    const Eigen::VectorXcd h = channel_vector(ue, geom);
    pp.power_w = 1.0;  // noise draw is power-independent
    const Eigen::VectorXcd noise = pilot_noise(comb, pp, rng);
    const Eigen::VectorXcd clean = static_cast<double>(pp.num_ue) * (comb * h);
    for (int d = 0; d < 2; ++d) {
      // The expensive product A*W is shared by all powers.
      const Eigen::MatrixXcd base_sensing = comb * dicts[d].atoms;
      for (std::size_t ip = 0; ip < powers.size(); ++ip) {
        const double amp = std::sqrt(cfg.power_w(powers[ip])) * pp.num_ue;
        const Eigen::VectorXcd y = amp / pp.num_ue * clean + noise;
        const EstimationResult est = psomp_estimate(
            y, amp * base_sensing, dicts[d].atoms, cfg.sparsity);
        err[d][ip].push_back(nmse(est.hhat.col(0), h));
      }
    }
  }

  // Grid error floors, one probe set shared by both designs.
  Rng probe_rng = master.stream(kStreamProbes);
  const Eigen::MatrixXcd probes =
      roi_probe_channels(roi, geom, cfg.nmse_samples, probe_rng);
  double floors[2];
  for (int d = 0; d < 2; ++d) {
    floors[d] = nmse_opt(d == 0 ? designs.baseline : designs.proposed, geom,
                         probes);
  }

  std::string csv = "p_dbm,design,metric,value,stderr\n";
  for (std::size_t ip = 0; ip < powers.size(); ++ip) {
    for (int d = 0; d < 2; ++d) {
      csv += result_row(powers[ip], names[d], "nmse_db",
                        aggregate(err[d][ip]));
      csv += format_row("%.9g,%s,nmse_opt_db,%.9g,0\n", powers[ip], names[d],
                        to_db(floors[d]));
    }
  }
  return csv;
}

std::string run_se_vs_power(const ExperimentConfig& cfg, Rng& master) {
  const ArrayGeometry geom = cfg.geometry();
  const RegionOfInterest roi = cfg.roi();
  json scratch;
  const DesignPair designs = resolve_designs(cfg, master, scratch);
  const Dictionary dicts[2] = {assemble_dictionary(designs.baseline, geom),
                               assemble_dictionary(designs.proposed, geom)};
  const char* names[2] = {"baseline", "proposed"};

  std::string csv = "p_dbm,design,metric,value,stderr\n";
  PilotParams pp;
  pp.num_ue = cfg.num_ue;
  pp.num_rf = cfg.num_rf;
  pp.num_slots = cfg.tau_p;
  pp.noise_w = cfg.noise_w();
  for (double p_dbm : cfg.power_sweep_dbm) {
    pp.power_w = cfg.power_w(p_dbm);
    for (int d = 0; d < 2; ++d) {
      std::vector<double> se_mr, se_mmse;
      for (int drop = 0; drop < cfg.drops; ++drop) {
        // Identical per-drop streams across designs and powers (CRN).
        Rng rng = master.stream(kStreamDrop + drop);
        const std::vector<ScenePoint> ues =
            sample_ue_positions(roi, geom.height, cfg.num_ue, rng);
        const DropSe se =
            uatf_drop_se(ues, dicts[d], geom, pp, cfg.noise_realizations,
                         cfg.sparsity, cfg.prelog, rng);
        se_mr.push_back(se.mr);
        se_mmse.push_back(se.mmse);
      }
      const Aggregate mr = aggregate(se_mr);
      const Aggregate mmse = aggregate(se_mmse);
      csv += format_row("%.9g,%s,sum_se_mr,%.9g,%.9g\n", p_dbm, names[d],
                        mr.mean, mr.stderr);
      csv += format_row("%.9g,%s,sum_se_mmse,%.9g,%.9g\n", p_dbm, names[d],
                        mmse.mean, mmse.stderr);
    }
  }
  if (cfg.drops == 0) csv += "# empty: zero drops configured\n";
  return csv;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "coherence-sweep", "level-curves",  "grid-export",
      "design-surface",  "nmse-vs-power", "se-vs-power"};
  return names;
}

std::vector<std::string> run_experiment(const std::string& name,
                                        const ExperimentConfig& cfg,
                                        const std::string& config_text,
                                        std::uint64_t seed,
                                        const std::string& out_dir,
                                        bool force) {
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw ConfigError("unknown experiment: " + name);
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t hash = config_hash(config_text);

  fs::create_directories(out_dir);
  const fs::path manifest_path = fs::path(out_dir) / "manifest.json";
  if (fs::exists(manifest_path) && !force) {
    std::ifstream in(manifest_path);
    json old;
    try {
      in >> old;
    } catch (const json::exception&) {
      throw std::runtime_error("unreadable manifest in " + out_dir +
                               " (use --force to overwrite)");
    }
    const bool same = old.value("experiment", "") == name &&
                      old.value("config_hash", "") ==
                          format_row("%016llx",
                                     static_cast<unsigned long long>(hash)) &&
                      old.value("seed", std::uint64_t(0)) == seed;
    if (!same) {
      throw std::runtime_error(
          "output directory holds a different run (use --force to overwrite)");
    }
  }

  json manifest;
  manifest["experiment"] = name;
  manifest["seed"] = seed;
  manifest["config_hash"] =
      format_row("%016llx", static_cast<unsigned long long>(hash));
  manifest["code_version"] = kCodeVersion;
  manifest["config"] = config_text;
  manifest["warnings"] = cfg.warnings;

  Rng master(seed);
  std::vector<std::pair<std::string, std::string>> outputs;  // file, content
  if (name == "coherence-sweep") {
    outputs.emplace_back("coherence_sweep.csv", run_coherence_sweep(cfg));
  } else if (name == "level-curves") {
    outputs.emplace_back("level_curves.csv", run_level_curves(cfg));
  } else if (name == "grid-export") {
    const DesignPair designs = resolve_designs(cfg, master, manifest);
    outputs.emplace_back("grid_proposed.csv", grid_to_csv(designs.proposed));
    outputs.emplace_back("grid_baseline.csv", grid_to_csv(designs.baseline));
  } else if (name == "design-surface") {
    outputs.emplace_back("design_surface.csv",
                         run_design_surface(cfg, master, manifest));
  } else if (name == "nmse-vs-power") {
    outputs.emplace_back("nmse_vs_power.csv", run_nmse_vs_power(cfg, master));
  } else {
    outputs.emplace_back("se_vs_power.csv", run_se_vs_power(cfg, master));
  }

  std::vector<std::string> files;
  for (const auto& [file, content] : outputs) {
    write_file(fs::path(out_dir) / file, content);
    files.push_back(file);
  }
  manifest["files"] = files;
  manifest["wall_time_s"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  write_file(manifest_path, manifest.dump(2) + "\n");
  files.push_back("manifest.json");
  return files;
}

}  // namespace polarmimo
