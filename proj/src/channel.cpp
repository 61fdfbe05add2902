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

#include "polarmimo/channel.hpp"

#include <stdexcept>

namespace polarmimo {

Eigen::VectorXcd channel_vector(const ScenePoint& p,
                                const ArrayGeometry& geom) {
  const Eigen::VectorXd r = exact_distances(p, geom);
  const double k = 2.0 * M_PI / geom.wavelength;
  Eigen::VectorXcd h(geom.num_antennas);
  for (int m = 0; m < geom.num_antennas; ++m) {
    const double amp = geom.wavelength / (4.0 * M_PI * r[m]);
    h[m] = std::polar(amp, -k * r[m]);
  }
  return h;
}

Eigen::MatrixXcd channel_matrix(const std::vector<ScenePoint>& positions,
                                const ArrayGeometry& geom) {
  if (positions.empty()) {
    throw std::invalid_argument("channel_matrix: no positions");
  }
  Eigen::MatrixXcd h(geom.num_antennas, positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k) {
    h.col(k) = channel_vector(positions[k], geom);
  }
  return h;
}

}  // namespace polarmimo
