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

#include "polarmimo/design.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace polarmimo {

namespace {

// Bracket for the beta bisection. beta = 0.3 over-samples distance so hard
// that any practical target is exceeded; beta = 30 keeps at most one or two
// samples per curve.
constexpr double kBetaLo = 0.3;
constexpr double kBetaHi = 30.0;
constexpr int kBisectIters = 60;

int grid_size(int n_curves, double beta, const ArrayGeometry& geom,
              const RegionOfInterest& roi) {
  GridDesignParams params;
  params.num_level_curves = n_curves;
  params.beta = beta;
  return build_proposed_grid(params, geom, roi).size();
}

}  // namespace

Eigen::MatrixXcd roi_probe_channels(const RegionOfInterest& roi,
                                    const ArrayGeometry& geom, int n_samples,
                                    Rng& rng) {
  const std::vector<ScenePoint> ues =
      sample_ue_positions(roi, geom.height, n_samples, rng);
  Eigen::MatrixXcd probes = channel_matrix(ues, geom);
  probes.colwise().normalize();
  return probes;
}

double nmse_opt(const PolarGrid& grid, const ArrayGeometry& geom,
                const Eigen::MatrixXcd& probes, ExecPolicy policy) {
  if (grid.points.empty()) throw std::invalid_argument("nmse_opt: empty grid");
  Eigen::MatrixXcd atoms = channel_matrix(grid.positions(), geom);
  atoms.colwise().normalize();
  Eigen::VectorXd best;
  best_match_power(atoms, probes, best, policy);
  return 1.0 - best.mean();
}

double nmse_opt(const PolarGrid& grid, const ArrayGeometry& geom,
                const RegionOfInterest& roi, int n_samples, Rng& rng,
                ExecPolicy policy) {
  if (n_samples < 1) throw std::invalid_argument("nmse_opt: n_samples < 1");
  return nmse_opt(grid, geom, roi_probe_channels(roi, geom, n_samples, rng),
                  policy);
}

double beta_for_target_q(int n_curves, int target_q, const ArrayGeometry& geom,
                         const RegionOfInterest& roi, double tolerance) {
  if (target_q < n_curves) {
    throw std::runtime_error(
        "beta_for_target_q: target smaller than the curve count");
  }
  double lo = kBetaLo, hi = kBetaHi;
  if (grid_size(n_curves, lo, geom, roi) < target_q) {
    throw std::runtime_error(
        "beta_for_target_q: target unreachable, max achieved Q = " +
        std::to_string(grid_size(n_curves, lo, geom, roi)));
  }
  for (int i = 0; i < kBisectIters; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (grid_size(n_curves, mid, geom, roi) >= target_q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // lo is the largest beta with Q >= target; the hi side undershoots but may
  // still sit inside the band, and a larger beta is preferred.
  const double band = tolerance * target_q;
  if (std::abs(grid_size(n_curves, hi, geom, roi) - target_q) <= band) {
    return hi;
  }
  const int q_lo = grid_size(n_curves, lo, geom, roi);
  if (std::abs(q_lo - target_q) <= band) return lo;
  throw std::runtime_error(
      "beta_for_target_q: no beta within the size band, nearest achieved Q = " +
      std::to_string(q_lo));
}

DesignResult optimize_design(int target_q, const ArrayGeometry& geom,
                             const RegionOfInterest& roi, int n_samples,
                             Rng& rng, int n_lo, int n_hi, ExecPolicy policy) {
  if (n_lo <= 0) n_lo = geom.num_antennas;
  if (n_hi <= 0) n_hi = std::min(target_q, 8 * geom.num_antennas);
  if (n_lo > n_hi || n_lo < 1) {
    throw std::invalid_argument("optimize_design: bad N_Gamma range");
  }

  const Eigen::MatrixXcd probes =
      roi_probe_channels(roi, geom, n_samples, rng);

  DesignResult result;
  std::map<int, DesignCandidate> cache;
  auto eval = [&](int n_curves) -> const DesignCandidate& {
    auto it = cache.find(n_curves);
    if (it != cache.end()) return it->second;
    DesignCandidate cand;
    cand.num_level_curves = n_curves;
    try {
      cand.beta = beta_for_target_q(n_curves, target_q, geom, roi);
      GridDesignParams params;
      params.num_level_curves = n_curves;
      params.beta = cand.beta;
      const PolarGrid grid = build_proposed_grid(params, geom, roi);
      cand.q = grid.size();
      cand.nmse = nmse_opt(grid, geom, probes, policy);
    } catch (const std::runtime_error&) {
      cand.reachable = false;
    }
    result.trace.push_back(cand);
    return cache.emplace(n_curves, cand).first->second;
  };

  auto better = [](const DesignCandidate& a, const DesignCandidate& b) {
    if (a.reachable != b.reachable) return a.reachable;
    if (a.nmse != b.nmse) return a.nmse < b.nmse;
    return a.num_level_curves < b.num_level_curves;
  };

  // Coarse pass: geometric lattice (the NMSE surface is shallow at this
  // scale even though it is jagged point to point).
  constexpr int kCoarse = 24;
  std::set<int> lattice;
  for (int i = 0; i < kCoarse; ++i) {
    const double t = static_cast<double>(i) / (kCoarse - 1);
    lattice.insert(static_cast<int>(
        std::lround(n_lo * std::pow(static_cast<double>(n_hi) / n_lo, t))));
  }
  DesignCandidate best;
  best.reachable = false;
  for (int n : lattice) {
    const DesignCandidate& c = eval(n);
    if (better(c, best)) best = c;
  }
  if (!best.reachable) {
    throw std::runtime_error("optimize_design: no candidate reached target Q");
  }

  // Two refinement stages between the winner's lattice neighbours.
  auto neighbour = [&](int w, bool below) {
    auto it = lattice.find(w);
    if (below) return it == lattice.begin() ? w : *std::prev(it);
    return std::next(it) == lattice.end() ? w : *std::next(it);
  };
  int lo = neighbour(best.num_level_curves, true);
  int hi = neighbour(best.num_level_curves, false);
  for (int stage = 0; stage < 2; ++stage) {
    const int step = std::max(1, (hi - lo) / 8);
    for (int n = lo; n <= hi; n += step) {
      const DesignCandidate& c = eval(n);
      if (better(c, best)) best = c;
    }
    lo = std::max(n_lo, best.num_level_curves - step);
    hi = std::min(n_hi, best.num_level_curves + step);
    if (step == 1) break;
  }

  result.winner = best;
  return result;
}

}  // namespace polarmimo
