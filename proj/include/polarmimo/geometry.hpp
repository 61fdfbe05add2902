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

#ifndef POLARMIMO_GEOMETRY_HPP
#define POLARMIMO_GEOMETRY_HPP

#include <Eigen/Dense>
#include <vector>

#include "polarmimo/rng.hpp"

namespace polarmimo {

/// Uniform linear array along the y axis at z = 0, centroid at the origin.
/// The ground plane where users live sits at z = -height.
struct ArrayGeometry {
  int num_antennas = 1;    // M
  double spacing = 0.0;    // delta [m]
  double height = 0.0;     // b [m], >= 0
  double wavelength = 0.0; // lambda [m]

  /// Signed element index i(m) = m - (M-1)/2, symmetric about the centroid.
  double element_index(int m) const {
    return static_cast<double>(m) - 0.5 * (num_antennas - 1);
  }

  /// Physical aperture (M-1)*delta, the end-to-end array length.
  double aperture() const { return (num_antennas - 1) * spacing; }

  bool valid() const {
    return num_antennas >= 1 && spacing > 0.0 && wavelength > 0.0 &&
           height >= 0.0;
  }
};

/// Annular sector of the ground plane: rho in [rho_min, rho_max],
/// azimuth in [phi_min, phi_max].
struct RegionOfInterest {
  double rho_min = 0.0;
  double rho_max = 0.0;
  double phi_min = 0.0;
  double phi_max = 0.0;

  bool valid() const {
    return rho_min > 0.0 && rho_min < rho_max && phi_min >= -M_PI / 2 &&
           phi_min < phi_max && phi_max <= M_PI / 2;
  }

  /// Membership test for a ground-plane position, with a small relative
  /// slack so boundary grid points survive floating-point round trips.
  bool contains(double rho, double phi, double tol = 1e-9) const {
    return rho >= rho_min * (1.0 - tol) && rho <= rho_max * (1.0 + tol) &&
           phi >= phi_min - tol && phi <= phi_max + tol;
  }
};

/// A 3D point in the scene (antenna, user, or grid location).
struct ScenePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static ScenePoint ground_polar(double rho, double phi, double height) {
    return {rho * std::cos(phi), rho * std::sin(phi), -height};
  }

  double ground_rho() const { return std::hypot(x, y); }
  double ground_phi() const { return std::atan2(y, x); }
  /// Distance from the array centroid (the origin).
  double range() const { return std::sqrt(x * x + y * y + z * z); }
};

/// Antenna coordinates [0, i(m)*delta, 0], ordered by m.
std::vector<ScenePoint> antenna_positions(const ArrayGeometry& geom);

/// Euclidean distances from p to every antenna. Throws std::invalid_argument
/// if p coincides with an antenna.
Eigen::VectorXd exact_distances(const ScenePoint& p, const ArrayGeometry& geom);

/// Second-order approximation of the excess distance over the range R for
/// antenna m, at effective angular coordinate Gamma:
///   -delta*Gamma*i(m) + delta^2/(2R) * (1 - Gamma^2) * i(m)^2.
double parabolic_distance(double range, double gamma, int m,
                          const ArrayGeometry& geom);

/// Unit-modulus steering vector, entry m = exp(+j 2pi/lambda * r_m).
Eigen::VectorXcd steering_vector(const ScenePoint& p,
                                 const ArrayGeometry& geom);

/// n user positions uniform over the RoI area (density proportional to rho),
/// placed on the ground plane z = -height.
std::vector<ScenePoint> sample_ue_positions(const RegionOfInterest& roi,
                                            double height, int n, Rng& rng);

}  // namespace polarmimo

#endif  // POLARMIMO_GEOMETRY_HPP
