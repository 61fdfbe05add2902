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

#include "polarmimo/geometry.hpp"

#include <stdexcept>

namespace polarmimo {

std::vector<ScenePoint> antenna_positions(const ArrayGeometry& geom) {
  std::vector<ScenePoint> out;
  out.reserve(geom.num_antennas);
  for (int m = 0; m < geom.num_antennas; ++m) {
    out.push_back({0.0, geom.element_index(m) * geom.spacing, 0.0});
  }
  return out;
}

Eigen::VectorXd exact_distances(const ScenePoint& p,
                                const ArrayGeometry& geom) {
  Eigen::VectorXd r(geom.num_antennas);
  for (int m = 0; m < geom.num_antennas; ++m) {
    const double dy = p.y - geom.element_index(m) * geom.spacing;
    r[m] = std::sqrt(p.x * p.x + dy * dy + p.z * p.z);
    if (r[m] == 0.0) {
      throw std::invalid_argument("point coincides with antenna " +
                                  std::to_string(m));
    }
  }
  return r;
}

double parabolic_distance(double range, double gamma, int m,
                          const ArrayGeometry& geom) {
  const double i = geom.element_index(m);
  const double d = geom.spacing;
  return -d * gamma * i +
         d * d / (2.0 * range) * (1.0 - gamma * gamma) * i * i;
}

Eigen::VectorXcd steering_vector(const ScenePoint& p,
                                 const ArrayGeometry& geom) {
  const Eigen::VectorXd r = exact_distances(p, geom);
  const double k = 2.0 * M_PI / geom.wavelength;
  Eigen::VectorXcd s(geom.num_antennas);
  for (int m = 0; m < geom.num_antennas; ++m) {
    s[m] = std::polar(1.0, k * r[m]);
  }
  return s;
}

std::vector<ScenePoint> sample_ue_positions(const RegionOfInterest& roi,
                                            double height, int n, Rng& rng) {
  std::vector<ScenePoint> out;
  out.reserve(n);
  const double r2min = roi.rho_min * roi.rho_min;
  const double r2max = roi.rho_max * roi.rho_max;
  for (int i = 0; i < n; ++i) {
    const double phi = rng.uniform(roi.phi_min, roi.phi_max);
    // Uniform over area: rho^2 uniform on [rho_min^2, rho_max^2].
    const double rho = std::sqrt(r2min + rng.uniform() * (r2max - r2min));
    out.push_back(ScenePoint::ground_polar(rho, phi, height));
  }
  return out;
}

}  // namespace polarmimo
