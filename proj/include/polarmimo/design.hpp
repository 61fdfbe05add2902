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

#ifndef POLARMIMO_DESIGN_HPP
#define POLARMIMO_DESIGN_HPP

#include <vector>

#include "polarmimo/channel.hpp"
#include "polarmimo/dictionary.hpp"

namespace polarmimo {

/// One evaluated (N_Gamma, beta) point of the design search.
struct DesignCandidate {
  int num_level_curves = 0;
  double beta = 0.0;
  int q = 0;             // achieved grid size
  double nmse = 1.0;     // linear NMSE_opt
  bool reachable = true; // false if no beta attains the target Q band
};

/// Winner plus the full evaluation trace (in evaluation order).
struct DesignResult {
  DesignCandidate winner;
  std::vector<DesignCandidate> trace;
};

/// Unit-norm channel vectors for n UEs drawn uniformly over the RoI area.
/// Shared across design candidates for common-random-numbers evaluation.
Eigen::MatrixXcd roi_probe_channels(const RegionOfInterest& roi,
                                    const ArrayGeometry& geom, int n_samples,
                                    Rng& rng);

/// NMSE_opt of a grid against a fixed probe set: 1 - mean over probes of the
/// best squared normalized correlation with any grid-point channel. The
/// correlation uses full channel vectors (amplitude taper included).
double nmse_opt(const PolarGrid& grid, const ArrayGeometry& geom,
                const Eigen::MatrixXcd& probes,
                ExecPolicy policy = ExecPolicy::kParallel);

/// Convenience overload drawing its own probe set.
double nmse_opt(const PolarGrid& grid, const ArrayGeometry& geom,
                const RegionOfInterest& roi, int n_samples, Rng& rng,
                ExecPolicy policy = ExecPolicy::kParallel);

/// Largest beta whose proposed grid at n_curves level curves achieves a size
/// within +-tolerance of target_q (achieved Q is non-increasing in beta).
/// Throws std::runtime_error naming the nearest achieved Q when the band is
/// unreachable.
double beta_for_target_q(int n_curves, int target_q, const ArrayGeometry& geom,
                         const RegionOfInterest& roi, double tolerance = 0.01);

/// Coarse-to-fine scan over N_Gamma at fixed grid size. Coarse pass:
/// geometric lattice between n_lo and n_hi (<= 64 total evaluations);
/// two refinement stages around the incumbent. Candidates share the probe
/// set. n_lo/n_hi default (0) to M and min(target_q, 8M).
DesignResult optimize_design(int target_q, const ArrayGeometry& geom,
                             const RegionOfInterest& roi, int n_samples,
                             Rng& rng, int n_lo = 0, int n_hi = 0,
                             ExecPolicy policy = ExecPolicy::kParallel);

}  // namespace polarmimo

#endif  // POLARMIMO_DESIGN_HPP
