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

#include <doctest.h>

#include "polarmimo/design.hpp"

using namespace polarmimo;

namespace {

ArrayGeometry table_geom() {
  ArrayGeometry g;
  g.num_antennas = 129;
  g.wavelength = 0.001;
  g.spacing = 0.005;
  g.height = 15.0;
  return g;
}

RegionOfInterest table_roi() { return {5.0, 25.0, -M_PI / 3, M_PI / 3}; }

}  // namespace

TEST_CASE("nmse_opt vanishes when the grid contains the probes") {
  const ArrayGeometry g = table_geom();
  const RegionOfInterest roi = table_roi();
  Rng rng(21);
  const std::vector<ScenePoint> pts =
      sample_ue_positions(roi, g.height, 50, rng);
  PolarGrid grid;
  for (int i = 0; i < 50; ++i) {
    grid.points.push_back({pts[i], 0, 0.0, i, pts[i].range()});
  }
  Eigen::MatrixXcd probes = channel_matrix(pts, g);
  probes.colwise().normalize();
  CHECK(nmse_opt(grid, g, probes) < 1e-12);
}

TEST_CASE("adding grid points never increases nmse_opt") {
  const ArrayGeometry g = table_geom();
  const RegionOfInterest roi = table_roi();
  Rng rng(22);
  const Eigen::MatrixXcd probes = roi_probe_channels(roi, g, 300, rng);

  GridDesignParams params;
  params.num_level_curves = 120;
  params.beta = 2.2;
  const PolarGrid small = build_proposed_grid(params, g, roi);
  params.num_level_curves = 240;
  PolarGrid big = build_proposed_grid(params, g, roi);
  // Superset of the same points plus the new curves' points.
  PolarGrid super = small;
  for (const auto& gp : big.points) super.points.push_back(gp);

  const double base = nmse_opt(small, g, probes);
  CHECK(base > 0.0);
  CHECK(base <= 1.0);
  CHECK(nmse_opt(super, g, probes) <= base + 1e-12);
  CHECK_THROWS_AS(nmse_opt(PolarGrid{}, g, probes), std::invalid_argument);
}

TEST_CASE("beta_for_target_q reproduces the published design points") {
  const ArrayGeometry g = table_geom();
  const RegionOfInterest roi = table_roi();
  // Published: N_Gamma = 310 -> beta ~ 1.81, N_Gamma = 568 -> beta ~ 1.51.
  CHECK(beta_for_target_q(310, 516, g, roi) ==
        doctest::Approx(1.81).epsilon(0.03));
  CHECK(beta_for_target_q(568, 1290, g, roi) ==
        doctest::Approx(1.51).epsilon(0.03));

  // The band is honoured.
  const double beta = beta_for_target_q(200, 600, g, roi);
  GridDesignParams params;
  params.num_level_curves = 200;
  params.beta = beta;
  const int q = build_proposed_grid(params, g, roi).size();
  CHECK(std::abs(q - 600) <= 6);

  CHECK_THROWS_AS(beta_for_target_q(129, 100000, g, roi), std::runtime_error);
  CHECK_THROWS_AS(beta_for_target_q(200, 100, g, roi), std::runtime_error);
}

TEST_CASE("optimize_design returns the argmin of its trace") {
  const ArrayGeometry g = table_geom();
  const RegionOfInterest roi = table_roi();
  Rng rng(23);
  const DesignResult res = optimize_design(516, g, roi, 200, rng);
  CHECK(res.winner.reachable);
  CHECK(std::abs(res.winner.q - 516) <= 6);
  CHECK(res.winner.nmse > 0.0);
  CHECK(res.winner.nmse < 1.0);
  CHECK(res.trace.size() >= 24);
  CHECK(res.trace.size() <= 64);
  for (const DesignCandidate& c : res.trace) {
    if (c.reachable) CHECK(res.winner.nmse <= c.nmse);
  }
  // Angular over-sampling: more curves than antennas.
  CHECK(res.winner.num_level_curves > g.num_antennas);
}

TEST_CASE("nmse_opt is deterministic for a fixed seed") {
  const ArrayGeometry g = table_geom();
  const RegionOfInterest roi = table_roi();
  GridDesignParams params;
  params.num_level_curves = 150;
  params.beta = 2.0;
  const PolarGrid grid = build_proposed_grid(params, g, roi);
  Rng r1(31), r2(31);
  const double a = nmse_opt(grid, g, roi, 400, r1);
  const double b = nmse_opt(grid, g, roi, 400, r2);
  CHECK(a == b);
}
