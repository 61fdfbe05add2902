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

#ifndef POLARMIMO_CHANNEL_HPP
#define POLARMIMO_CHANNEL_HPP

#include <Eigen/Dense>
#include <vector>

#include "polarmimo/geometry.hpp"

namespace polarmimo {

/// LoS near-field channel to the array from a point source:
///   h_m = lambda/(4 pi r_m) * exp(-j 2pi/lambda * r_m),
/// with the exact spherical distance r_m to each antenna. The free-space
/// amplitude is deterministic; randomness enters only through positions
/// and receiver noise.
Eigen::VectorXcd channel_vector(const ScenePoint& p, const ArrayGeometry& geom);

/// M x K matrix whose column k is channel_vector(positions[k]).
Eigen::MatrixXcd channel_matrix(const std::vector<ScenePoint>& positions,
                                const ArrayGeometry& geom);

}  // namespace polarmimo

#endif  // POLARMIMO_CHANNEL_HPP
