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

#include "polarmimo/dictionary.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace polarmimo {

namespace {

// Iteration cap for a single distance ladder; a curve that has not entered
// the RoI after this many samples is treated as empty.
constexpr int kMaxLadderSteps = 1 << 22;

struct LadderPoint {
  ScenePoint pos;
  double range = 0.0;
  bool geometric = false;  // R^2 (1 - gamma^2) >= b^2
  bool inside = false;     // geometric and within the RoI
};

LadderPoint eval_ladder_point(double range, double gamma_k, double height,
                              const RegionOfInterest& roi) {
  LadderPoint lp;
  lp.range = range;
  if (!std::isfinite(range)) return lp;
  const double x2 = range * range * (1.0 - gamma_k * gamma_k) -
                    height * height;
  if (x2 < 0.0) return lp;
  lp.geometric = true;
  const double x = std::sqrt(x2);
  const double y = range * gamma_k;
  lp.pos = {x, y, -height};
  const double rho2 = range * range - height * height;
  const double rho = rho2 > 0.0 ? std::sqrt(rho2) : 0.0;
  lp.inside = roi.contains(rho, std::atan2(y, x));
  return lp;
}

}  // namespace

std::vector<ScenePoint> PolarGrid::positions() const {
  std::vector<ScenePoint> out;
  out.reserve(points.size());
  for (const auto& gp : points) out.push_back(gp.pos);
  return out;
}

double gamma_coordinate(double range, double phi, double height) {
  if (range <= 0.0 || range < height) {
    throw std::domain_error("gamma_coordinate: range below array height");
  }
  const double ratio = height / range;
  return std::sqrt(1.0 - ratio * ratio) * std::sin(phi);
}

double gamma_max(const RegionOfInterest& roi, double height) {
  return roi.rho_max /
         std::sqrt(roi.rho_max * roi.rho_max + height * height) *
         std::sin(roi.phi_max);
}

std::vector<double> level_curve_values(int n_curves, double g_max) {
  if (n_curves < 1) {
    throw std::invalid_argument("level_curve_values: need at least one curve");
  }
  std::vector<double> out(n_curves);
  for (int k = 0; k < n_curves; ++k) {
    out[k] = g_max * (2.0 * k - n_curves + 1.0) / n_curves;
  }
  return out;
}

double distance_ladder_scale(double gamma, double beta,
                             const ArrayGeometry& geom) {
  const double l = geom.aperture();
  return (l / beta) * (l / beta) * (1.0 - gamma * gamma) /
         (2.0 * geom.wavelength);
}

std::vector<double> distance_samples(double gamma_k, double beta,
                                     double max_range,
                                     const ArrayGeometry& geom,
                                     const RegionOfInterest& roi) {
  if (beta <= 0.0) throw std::invalid_argument("distance_samples: beta <= 0");
  const double z = distance_ladder_scale(gamma_k, beta, geom);
  // Ranges beyond 1e9 m are sentinel values for "unbounded"; folding them
  // into the ladder would perturb every sample by ~R^2/R_0.
  const double inv_r0 = max_range >= 1e9 ? 0.0 : 1.0 / max_range;
  const double b = geom.height;
  // Below this range the curve is under the RoI inner edge for good.
  const double range_floor =
      std::sqrt(roi.rho_min * roi.rho_min + b * b) * (1.0 - 1e-9);

  std::vector<double> out;
  bool entered = false;
  for (int n = 0; n < kMaxLadderSteps; ++n) {
    // 1/R_{n,k} = 1/R_0 + n/Z_k keeps the ladder exact even for infinite R_0.
    const double inv_r = inv_r0 + n / z;
    const double range = inv_r > 0.0
                             ? 1.0 / inv_r
                             : std::numeric_limits<double>::infinity();
    const LadderPoint lp = eval_ladder_point(range, gamma_k, b, roi);
    if (lp.inside) {
      out.push_back(range);
      entered = true;
    } else {
      if (entered || range < range_floor) break;
      // Still above the RoI outer edge; keep descending.
    }
  }
  return out;
}

PolarGrid build_proposed_grid(const GridDesignParams& params,
                              const ArrayGeometry& geom,
                              const RegionOfInterest& roi) {
  if (!geom.valid() || !roi.valid()) {
    throw std::invalid_argument("build_proposed_grid: invalid geometry/RoI");
  }
  double r0 = params.max_range;
  if (std::isnan(r0)) {
    r0 = std::sqrt(roi.rho_max * roi.rho_max + geom.height * geom.height);
  }
  const double g_max = gamma_max(roi, geom.height);
  const std::vector<double> gammas =
      level_curve_values(params.num_level_curves, g_max);

  PolarGrid grid;
  grid.baseline = false;
  grid.num_level_curves = params.num_level_curves;
  grid.beta = params.beta;
  for (int k = 0; k < params.num_level_curves; ++k) {
    const std::vector<double> ranges =
        distance_samples(gammas[k], params.beta, r0, geom, roi);
    int n = 0;
    // Recover each sample's ladder index from its range.
    const double z = distance_ladder_scale(gammas[k], params.beta, geom);
    const double inv_r0 = r0 >= 1e9 ? 0.0 : 1.0 / r0;
    for (const double range : ranges) {
      const LadderPoint lp = eval_ladder_point(range, gammas[k], geom.height,
                                               roi);
      const int index = static_cast<int>(
          std::lround((1.0 / range - inv_r0) * z));
      grid.points.push_back({lp.pos, k, gammas[k], index, range});
      ++n;
    }
    (void)n;
  }
  return grid;
}

PolarGrid build_baseline_grid(double beta, const ArrayGeometry& geom,
                              const RegionOfInterest& roi) {
  if (!geom.valid() || !roi.valid()) {
    throw std::invalid_argument("build_baseline_grid: invalid geometry/RoI");
  }
  if (beta <= 0.0) {
    throw std::invalid_argument("build_baseline_grid: beta <= 0");
  }
  const int m_count = geom.num_antennas;
  const double sin_max = std::sin(roi.phi_max);
  const double b = geom.height;

  PolarGrid grid;
  grid.baseline = true;
  grid.num_level_curves = m_count;
  grid.beta = beta;
  for (int m = 0; m < m_count; ++m) {
    // Angular samples uniform in sin(phi) across the RoI span.
    const double s = sin_max * (2.0 * m - m_count + 1.0) / m_count;
    const double phi = std::asin(s);
    if (phi < roi.phi_min - 1e-12 || phi > roi.phi_max + 1e-12) continue;
    const double z = distance_ladder_scale(s, beta, geom);
    const double cos_phi = std::sqrt(1.0 - s * s);
    for (int n = 1;; ++n) {
      const double rho = z / n;
      if (rho < roi.rho_min * (1.0 - 1e-9)) break;
      if (!roi.contains(rho, phi)) continue;
      const ScenePoint pos{rho * cos_phi, rho * s, -b};
      const double range = std::sqrt(rho * rho + b * b);
      grid.points.push_back({pos, m, s, n, range});
    }
  }
  return grid;
}

Dictionary assemble_dictionary(const PolarGrid& grid,
                               const ArrayGeometry& geom) {
  if (grid.points.empty()) {
    throw std::invalid_argument("assemble_dictionary: empty grid");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(geom.num_antennas));
  Dictionary dict;
  dict.grid = grid;
  dict.atoms.resize(geom.num_antennas, grid.size());
  for (int q = 0; q < grid.size(); ++q) {
    // Channel phase convention (conjugate of the raw steering vector), so a
    // complex gain can align an atom with the channel at its grid point.
    dict.atoms.col(q) = steering_vector(grid.points[q].pos, geom).conjugate() *
                        scale;
  }
  return dict;
}

double mutual_coherence(const Dictionary& dict, ExecPolicy policy) {
  if (dict.atoms.cols() < 2) {
    throw std::invalid_argument("mutual_coherence: need at least two atoms");
  }
  return gram_max_offdiagonal(dict.atoms, policy);
}

double correlation_quadratic(const ScenePoint& p, const ScenePoint& q,
                             const ArrayGeometry& geom) {
  const double b = geom.height;
  const double gp = gamma_coordinate(p.range(), p.ground_phi(), b);
  const double gq = gamma_coordinate(q.range(), q.ground_phi(), b);
  const double d = geom.spacing;
  const double lam = geom.wavelength;
  const double a = 2.0 * M_PI * d / lam * (gq - gp);
  const double bb = M_PI * d * d / lam *
                    ((1.0 - gp * gp) / p.range() - (1.0 - gq * gq) / q.range());
  std::complex<double> acc(0.0, 0.0);
  for (int m = 0; m < geom.num_antennas; ++m) {
    const double i = geom.element_index(m);
    acc += std::polar(1.0, a * i + bb * i * i);
  }
  return std::abs(acc) / geom.num_antennas;
}

double correlation_exact(const ScenePoint& p, const ScenePoint& q,
                         const ArrayGeometry& geom) {
  const Eigen::VectorXcd sp = steering_vector(p, geom);
  const Eigen::VectorXcd sq = steering_vector(q, geom);
  return std::abs(sp.dot(sq)) / geom.num_antennas;
}

namespace {

double adaptive_simpson(double (*f)(double), double a, double b, double fa,
                        double fb, double fm, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double h = b - a;
  const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, fm, flm, eps / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, fb, frm, eps / 2.0, depth - 1);
}

double integrate(double (*f)(double), double a, double b, double eps) {
  // Split into ~unit panels first; the integrands oscillate with period
  // shrinking as 1/t, so long ranges need the pre-subdivision.
  const int panels = std::max(1, static_cast<int>(std::ceil(b - a)));
  const double w = (b - a) / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * w;
    const double hi = lo + w;
    const double mid = 0.5 * (lo + hi);
    total += adaptive_simpson(f, lo, hi, f(lo), f(hi), f(mid), eps / panels,
                              40);
  }
  return total;
}

double fresnel_cos_kernel(double t) { return std::cos(0.5 * M_PI * t * t); }
double fresnel_sin_kernel(double t) { return std::sin(0.5 * M_PI * t * t); }

}  // namespace

void fresnel_integrals(double x, double& c, double& s) {
  const double sign = x < 0.0 ? -1.0 : 1.0;
  const double ax = std::abs(x);
  if (ax == 0.0) {
    c = s = 0.0;
    return;
  }
  c = sign * integrate(fresnel_cos_kernel, 0.0, ax, 1e-10);
  s = sign * integrate(fresnel_sin_kernel, 0.0, ax, 1e-10);
}

std::complex<double> fresnel_g(double beta) {
  if (beta <= 0.0) throw std::domain_error("fresnel_g: beta <= 0");
  double c = 0.0, s = 0.0;
  fresnel_integrals(beta, c, s);
  return std::complex<double>(c, s) / beta;
}

double beta_from_range_pair(double gamma, double range_p, double range_q,
                            const ArrayGeometry& geom) {
  const double md = geom.num_antennas * geom.spacing;
  const double b2 = md * md * (1.0 - gamma * gamma) /
                    (2.0 * geom.wavelength) *
                    std::abs(1.0 / range_p - 1.0 / range_q);
  return std::sqrt(b2);
}

double dirichlet_correlation(double delta_gamma, const ArrayGeometry& geom) {
  const double x = M_PI * geom.spacing * delta_gamma / geom.wavelength;
  const double m = geom.num_antennas;
  const double den = m * std::sin(x);
  if (std::abs(den) < 1e-300) {
    // Removable singularity (and grating-lobe repeats).
    return std::abs(std::cos(m * x) / std::cos(x));
  }
  return std::abs(std::sin(m * x) / den);
}

std::string grid_to_csv(const PolarGrid& grid) {
  std::string out = "k,n,gamma,R,x,y,z\n";
  char buf[160];
  for (const auto& gp : grid.points) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                  gp.curve, gp.sample, gp.gamma, gp.range, gp.pos.x, gp.pos.y,
                  gp.pos.z);
    out += buf;
  }
  return out;
}

}  // namespace polarmimo
