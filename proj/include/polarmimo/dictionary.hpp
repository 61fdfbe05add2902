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

#ifndef POLARMIMO_DICTIONARY_HPP
#define POLARMIMO_DICTIONARY_HPP

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "polarmimo/geometry.hpp"
#include "polarmimo/kernels.hpp"

namespace polarmimo {

/// Parameters of the level-curve grid construction.
struct GridDesignParams {
  int target_q = 0;         // requested grid size (informational)
  int num_level_curves = 1; // N_Gamma
  double beta = 1.0;        // distance sampling factor
  /// Largest range considered on each level curve. Defaults to the slant
  /// range of the far RoI corner, sqrt(rho_max^2 + b^2). Values >= 1e9 m
  /// (including +infinity) are treated as unbounded, recovering the classic
  /// 1/n distance ladder.
  double max_range = std::numeric_limits<double>::quiet_NaN();
};

/// One grid point with its construction provenance.
struct GridPoint {
  ScenePoint pos;
  int curve = 0;       // level-curve index k (or angular index for baseline)
  double gamma = 0.0;  // Gamma_k of the curve
  int sample = 0;      // distance sample index n
  double range = 0.0;  // R_{n,k}, distance from the array centroid
};

/// Ordered set of grid points, either from the proposed level-curve
/// construction or from the ground-level baseline design.
struct PolarGrid {
  std::vector<GridPoint> points;
  bool baseline = false;
  int num_level_curves = 0;
  double beta = 0.0;
  int skipped = 0;  // points rejected for geometric invalidity

  int size() const { return static_cast<int>(points.size()); }
  std::vector<ScenePoint> positions() const;
};

/// M x Q matrix of unit-norm steering atoms plus the grid they came from.
struct Dictionary {
  Eigen::MatrixXcd atoms;
  PolarGrid grid;
};

/// Effective angular coordinate Gamma = sqrt(1 - (b/R)^2) * sin(phi).
/// Throws std::domain_error for R < b.
double gamma_coordinate(double range, double phi, double height);

/// Largest |Gamma| whose level curve passes through the RoI:
///   rho_max / sqrt(rho_max^2 + b^2) * sin(phi_max).
double gamma_max(const RegionOfInterest& roi, double height);

/// Gamma_k = Gamma_max * (2k - N + 1)/N for k = 0..N-1.
std::vector<double> level_curve_values(int n_curves, double g_max);

/// Ranges R_{n,k} on the level curve Gamma_k, spaced so consecutive samples
/// keep 1/R increments of 1/Z_k with Z_k = (L/beta)^2 (1 - Gamma_k^2)/(2
/// lambda), L the array aperture. Emission walks n = 0, 1, ... from
/// max_range downward, skips leading samples still beyond the RoI outer
/// edge, and stops at the first sample that leaves the RoI (or the ground
/// plane) after entry. Empty result means the curve never enters the RoI.
std::vector<double> distance_samples(double gamma_k, double beta,
                                     double max_range,
                                     const ArrayGeometry& geom,
                                     const RegionOfInterest& roi);

/// Level-curve grid for an elevated array (construction steps 1-5).
PolarGrid build_proposed_grid(const GridDesignParams& params,
                              const ArrayGeometry& geom,
                              const RegionOfInterest& roi);

/// Ground-level baseline grid: M angular samples with sin(phi) uniform over
/// (-sin(phi_max), sin(phi_max)) and 1/n distance ladders clipped to the
/// RoI; points placed on the ground plane.
PolarGrid build_baseline_grid(double beta, const ArrayGeometry& geom,
                              const RegionOfInterest& roi);

/// Unit-norm steering dictionary over the grid (column q = s(g_q)/sqrt(M)).
Dictionary assemble_dictionary(const PolarGrid& grid,
                               const ArrayGeometry& geom);

/// Largest |w_i^H w_j| over distinct columns, in [0, 1].
double mutual_coherence(const Dictionary& dict,
                        ExecPolicy policy = ExecPolicy::kParallel);

/// Quadratic-phase correlation |1/M sum_m exp(j(Am + Bm^2))| between the
/// steering vectors of p and q, with m symmetric around zero.
double correlation_quadratic(const ScenePoint& p, const ScenePoint& q,
                             const ArrayGeometry& geom);

/// Fully exact normalized correlation |s(p)^H s(q)| / M.
double correlation_exact(const ScenePoint& p, const ScenePoint& q,
                         const ArrayGeometry& geom);

/// Fresnel integrals C(x), S(x) of cos/sin(pi t^2 / 2), by adaptive
/// quadrature to 1e-10 absolute accuracy.
void fresnel_integrals(double x, double& c, double& s);

/// G(beta) = (C(beta) + j S(beta)) / beta.
std::complex<double> fresnel_g(double beta);

/// Distance-ladder scale Z = (L/beta)^2 (1 - gamma^2) / (2 lambda).
double distance_ladder_scale(double gamma, double beta,
                             const ArrayGeometry& geom);

/// Sampling factor linking two same-curve ranges to a Fresnel argument:
///   beta^2 = M^2 delta^2 (1 - g^2) / (2 lambda) * |1/R_p - 1/R_q|.
double beta_from_range_pair(double gamma, double range_p, double range_q,
                            const ArrayGeometry& geom);

/// Far-field correlation |sin(pi M delta dG / lambda) /
/// (M sin(pi delta dG / lambda))| with the removable singularity at 0.
double dirichlet_correlation(double delta_gamma, const ArrayGeometry& geom);

/// Grid CSV with header k,n,gamma,R,x,y,z and 9 significant digits.
std::string grid_to_csv(const PolarGrid& grid);

}  // namespace polarmimo

#endif  // POLARMIMO_DICTIONARY_HPP
