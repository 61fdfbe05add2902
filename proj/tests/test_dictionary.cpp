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

#include <sstream>

#include "polarmimo/dictionary.hpp"

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

TEST_CASE("gamma coordinate") {
  CHECK(gamma_coordinate(10.0, 0.5, 0.0) == doctest::Approx(std::sin(0.5)));
  // Far away the height becomes irrelevant.
  CHECK(gamma_coordinate(1e9, 0.5, 15.0) ==
        doctest::Approx(std::sin(0.5)).epsilon(1e-12));
  CHECK_THROWS_AS(gamma_coordinate(10.0, 0.5, 20.0), std::domain_error);
  // Table-I corner value: (25/sqrt(850)) * sin(60 deg).
  CHECK(gamma_max(table_roi(), 15.0) == doctest::Approx(0.7426107).epsilon(1e-6));
}

TEST_CASE("level curve values are symmetric and uniform") {
  const auto one = level_curve_values(1, 0.7);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == 0.0);

  const auto vals = level_curve_values(10, 0.7);
  REQUIRE(vals.size() == 10);
  for (int k = 0; k < 10; ++k) {
    CHECK(vals[k] == doctest::Approx(-vals[9 - k]));
  }
  CHECK(vals[9] == doctest::Approx(0.7 * 9.0 / 10.0));
  CHECK_THROWS_AS(level_curve_values(0, 1.0), std::invalid_argument);
}

TEST_CASE("distance ladder scale") {
  const ArrayGeometry g = table_geom();
  // (0.64/2.5)^2 / (2e-3) with gamma = 0.
  CHECK(distance_ladder_scale(0.0, 2.5, g) == doctest::Approx(32.768));
  CHECK(distance_ladder_scale(0.6, 2.5, g) ==
        doctest::Approx(32.768 * (1.0 - 0.36)));
}

TEST_CASE("distance samples walk inward and stay in the RoI") {
  const ArrayGeometry g = table_geom();
  const RegionOfInterest roi = table_roi();
  const double r0 = std::sqrt(25.0 * 25.0 + 15.0 * 15.0);
  const auto ranges = distance_samples(0.2, 1.8, r0, g, roi);
  REQUIRE(!ranges.empty());
  for (std::size_t i = 0; i + 1 < ranges.size(); ++i) {
    CHECK(ranges[i] > ranges[i + 1]);
  }
  for (double r : ranges) {
    const double rho = std::sqrt(r * r - 15.0 * 15.0);
    CHECK(rho >= roi.rho_min * (1.0 - 1e-9));
    CHECK(rho <= roi.rho_max * (1.0 + 1e-9));
  }
  // Infinite R0 degenerates to the classic R = Z/n ladder.
  const double z = distance_ladder_scale(0.0, 2.0, g);
  const auto inf_ranges =
      distance_samples(0.0, 2.0, std::numeric_limits<double>::infinity(), g,
                       {5.0, 25.0, -M_PI / 2, M_PI / 2});
  for (double r : inf_ranges) {
    const double n = z / r;
    CHECK(n == doctest::Approx(std::round(n)).epsilon(1e-12));
  }
}

TEST_CASE("proposed grid reproduces the published sizes") {
  const ArrayGeometry g = table_geom();
  const RegionOfInterest roi = table_roi();
  GridDesignParams params;
  params.num_level_curves = 310;
  params.beta = 1.81;
  const PolarGrid grid = build_proposed_grid(params, g, roi);
  CHECK(grid.size() == 512);  // within 1% of the published Q = 514

  // Every point sits on its level curve.
  const auto gammas = level_curve_values(310, gamma_max(roi, g.height));
  for (const GridPoint& gp : grid.points) {
    const double got =
        gamma_coordinate(gp.range, gp.pos.ground_phi(), g.height);
    CHECK(std::abs(got - gammas[gp.curve]) <= 1e-9);
  }
}

TEST_CASE("proposed grid size is monotone in beta and curve count") {
  const ArrayGeometry g = table_geom();
  const RegionOfInterest roi = table_roi();
  auto q_of = [&](int n, double beta) {
    GridDesignParams params;
    params.num_level_curves = n;
    params.beta = beta;
    return build_proposed_grid(params, g, roi).size();
  };
  int prev = q_of(200, 0.9);
  for (double beta : {1.2, 1.5, 1.9, 2.4, 3.0}) {
    const int q = q_of(200, beta);
    CHECK(q <= prev);
    prev = q;
  }
  prev = q_of(150, 1.6);
  for (int n : {200, 250, 320, 400}) {
    const int q = q_of(n, 1.6);
    CHECK(q >= prev);
    prev = q;
  }
}

TEST_CASE("baseline grid reproduces the published sizes") {
  const ArrayGeometry g = table_geom();
  const RegionOfInterest roi = table_roi();
  const PolarGrid b25 = build_baseline_grid(2.5, g, roi);
  CHECK(b25.size() == 499);  // published 501 +- 1%
  const PolarGrid b156 = build_baseline_grid(1.56, g, roi);
  CHECK(b156.size() == 1287);  // published 1298 +- 1%
  for (const GridPoint& gp : b25.points) {
    CHECK(gp.pos.z == doctest::Approx(-15.0));
    CHECK(roi.contains(gp.pos.ground_rho(), gp.pos.ground_phi()));
  }
}

TEST_CASE("degenerate scenario: proposed equals baseline") {
  ArrayGeometry g = table_geom();
  g.height = 0.0;
  const RegionOfInterest roi{5.0, 25.0, -M_PI / 2, M_PI / 2};
  for (double beta : {1.2, 1.6, 2.5}) {
    const PolarGrid base = build_baseline_grid(beta, g, roi);
    GridDesignParams params;
    params.num_level_curves = g.num_antennas;
    params.beta = beta;
    params.max_range = 1e9;  // sentinel: unbounded ladder
    const PolarGrid prop = build_proposed_grid(params, g, roi);
    REQUIRE(base.size() == prop.size());
    for (int i = 0; i < base.size(); ++i) {
      CHECK(std::abs(base.points[i].pos.x - prop.points[i].pos.x) <= 1e-9);
      CHECK(std::abs(base.points[i].pos.y - prop.points[i].pos.y) <= 1e-9);
      CHECK(std::abs(base.points[i].pos.z - prop.points[i].pos.z) <= 1e-9);
    }
  }
}

TEST_CASE("dictionary atoms are unit norm with channel phase") {
  const ArrayGeometry g = table_geom();
  const RegionOfInterest roi = table_roi();
  const PolarGrid grid = build_baseline_grid(2.5, g, roi);
  const Dictionary dict = assemble_dictionary(grid, g);
  REQUIRE(dict.atoms.cols() == grid.size());
  REQUIRE(dict.atoms.rows() == 129);
  for (int q : {0, 100, grid.size() - 1}) {
    CHECK(dict.atoms.col(q).norm() == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(assemble_dictionary(PolarGrid{}, g), std::invalid_argument);
}

TEST_CASE("mutual coherence basics") {
  const ArrayGeometry g = table_geom();
  const RegionOfInterest roi = table_roi();
  const Dictionary dict =
      assemble_dictionary(build_baseline_grid(2.8, g, roi), g);
  const double mu = mutual_coherence(dict);
  CHECK(mu > 0.0);
  CHECK(mu <= 1.0);

  // Column order must not matter.
  Dictionary shuffled = dict;
  shuffled.atoms.col(0).swap(shuffled.atoms.col(5));
  CHECK(mutual_coherence(shuffled) == doctest::Approx(mu).epsilon(1e-9));

  // A duplicated atom drives the coherence to 1.
  Dictionary dup = dict;
  dup.atoms.col(1) = dup.atoms.col(0);
  CHECK(mutual_coherence(dup) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("Fresnel integrals against frozen references") {
  double c = 0.0, s = 0.0;
  fresnel_integrals(1.0, c, s);
  CHECK(c == doctest::Approx(0.7798934).epsilon(1e-6));
  CHECK(s == doctest::Approx(0.4382591).epsilon(1e-6));
  fresnel_integrals(-1.0, c, s);  // odd functions
  CHECK(c == doctest::Approx(-0.7798934).epsilon(1e-6));
  CHECK(s == doctest::Approx(-0.4382591).epsilon(1e-6));
  fresnel_integrals(0.0, c, s);
  CHECK(c == 0.0);
  CHECK(s == 0.0);

  // Large-argument limit: |G(beta)| -> 1/(sqrt(2) beta). At beta = 50 the
  // residual oscillation of beta*|G| is exactly 1/(pi beta) in amplitude
  // (and at its crest there, since 1250*pi is an even multiple of pi), so
  // the absolute tolerance is applied to |G| itself.
  const double g50 = std::abs(fresnel_g(50.0));
  CHECK(std::abs(g50 - 1.0 / (50.0 * std::sqrt(2.0))) < 1e-3);
  CHECK(50.0 * g50 == doctest::Approx(0.7026193).epsilon(1e-5));
  CHECK_THROWS_AS(fresnel_g(0.0), std::domain_error);
}

TEST_CASE("quadratic-phase correlation tracks the exact one") {
  const ArrayGeometry g = table_geom();
  // Two nearby points on the gamma = 0.2 level curve.
  auto on_curve = [&](double range, double gamma) {
    const double x2 = range * range * (1.0 - gamma * gamma) - 15.0 * 15.0;
    return ScenePoint{std::sqrt(x2), range * gamma, -15.0};
  };
  const ScenePoint p = on_curve(20.0, 0.2);
  const ScenePoint q = on_curve(17.0, 0.2);
  const double quad = correlation_quadratic(p, q, g);
  const double exact = correlation_exact(p, q, g);
  CHECK(std::abs(quad - exact) < 0.01);
  // Self-correlation is exactly 1.
  CHECK(correlation_exact(p, p, g) == doctest::Approx(1.0));
  CHECK(correlation_quadratic(p, p, g) == doctest::Approx(1.0));
}

TEST_CASE("Dirichlet correlation and its far-field oracle") {
  const ArrayGeometry g = table_geom();
  CHECK(dirichlet_correlation(0.0, g) == doctest::Approx(1.0));
  // First zero at delta_gamma = lambda / (M delta).
  const double first_zero = g.wavelength / (g.num_antennas * g.spacing);
  CHECK(dirichlet_correlation(first_zero, g) < 1e-9);

  // Two very distant points on different gamma rays: the exact correlation
  // approaches the Dirichlet kernel in delta gamma.
  const double r = 1e6;
  const double g1 = 0.10, g2 = 0.1004;
  const ScenePoint p{r * std::sqrt(1.0 - g1 * g1), r * g1, 0.0};
  const ScenePoint q{r * std::sqrt(1.0 - g2 * g2), r * g2, 0.0};
  const double exact = correlation_exact(p, q, g);
  CHECK(std::abs(exact - dirichlet_correlation(g2 - g1, g)) < 1e-3);
}

TEST_CASE("sampling factor from a range pair") {
  const ArrayGeometry g = table_geom();
  // beta^2 = (M delta)^2 (1-gamma^2)/(2 lambda) |1/Rp - 1/Rq|.
  const double beta = beta_from_range_pair(0.0, 20.0, 10.0, g);
  const double md = 129 * 0.005;
  CHECK(beta ==
        doctest::Approx(std::sqrt(md * md / (2.0 * 0.001) * (0.05))));
}

TEST_CASE("grid CSV export") {
  const ArrayGeometry g = table_geom();
  const RegionOfInterest roi = table_roi();
  GridDesignParams params;
  params.num_level_curves = 9;
  params.beta = 1.5;
  const PolarGrid grid = build_proposed_grid(params, g, roi);
  const std::string csv = grid_to_csv(grid);
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "k,n,gamma,R,x,y,z");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == grid.size());
}
