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

#include "polarmimo/evaluation.hpp"

#include <cmath>
#include <stdexcept>

namespace polarmimo {

Eigen::MatrixXcd mr_combiner(const Eigen::MatrixXcd& hhat) { return hhat; }

Eigen::MatrixXcd mmse_combiner(const Eigen::MatrixXcd& hhat, double power_w,
                               double noise_w) {
  if (power_w <= 0.0 || noise_w <= 0.0) {
    throw std::invalid_argument("mmse_combiner: bad power/noise");
  }
  const Eigen::Index m = hhat.rows();
  Eigen::MatrixXcd cov = power_w * (hhat * hhat.adjoint());
  cov += noise_w * Eigen::MatrixXcd::Identity(m, m);
  return power_w * cov.llt().solve(hhat);
}

namespace {

struct UatfAccumulator {
  Eigen::VectorXcd mean_gain;   // E{v_k^H h_k}
  Eigen::MatrixXd mean_power;   // E{|v_k^H h_i|^2}
  Eigen::VectorXd mean_energy;  // E{||v_k||^2}
  int count = 0;

  explicit UatfAccumulator(int k)
      : mean_gain(Eigen::VectorXcd::Zero(k)),
        mean_power(Eigen::MatrixXd::Zero(k, k)),
        mean_energy(Eigen::VectorXd::Zero(k)) {}

  void add(const Eigen::MatrixXcd& combiners, const Eigen::MatrixXcd& h) {
    const Eigen::MatrixXcd gains = combiners.adjoint() * h;  // (k, i)
    mean_gain += gains.diagonal();
    mean_power += gains.cwiseAbs2();
    mean_energy += combiners.colwise().squaredNorm().transpose();
    ++count;
  }

  double sum_se(double power_w, double noise_w, double prelog) const {
    double se = 0.0;
    for (Eigen::Index k = 0; k < mean_gain.size(); ++k) {
      const double signal = power_w * std::norm(mean_gain[k] / double(count));
      const double interference =
          power_w * mean_power.row(k).sum() / count - signal;
      const double noise = noise_w * mean_energy[k] / count;
      se += std::log2(1.0 + signal / (interference + noise));
    }
    return prelog * se;
  }
};

}  // namespace

DropSe uatf_drop_se(const std::vector<ScenePoint>& ue_positions,
                    const Dictionary& dict, const ArrayGeometry& geom,
                    const PilotParams& pp, int n_realizations, int sparsity,
                    double prelog, Rng& rng) {
  const int k = static_cast<int>(ue_positions.size());
  if (k < 1 || n_realizations < 1) {
    throw std::invalid_argument("uatf_drop_se: empty drop");
  }
  const Eigen::MatrixXcd h = channel_matrix(ue_positions, geom);

  UatfAccumulator acc_mr(k), acc_mmse(k);
  for (int t = 0; t < n_realizations; ++t) {
    const Eigen::MatrixXd comb =
        generate_combiners(geom, pp.num_rf, pp.num_slots, rng);
    const Eigen::MatrixXcd sensing =
        std::sqrt(pp.power_w) * pp.num_ue * (comb * dict.atoms);
    Eigen::MatrixXcd hhat(h.rows(), k);
    for (int u = 0; u < k; ++u) {
      const Eigen::VectorXcd y = simulate_pilot(h.col(u), comb, pp, rng);
      hhat.col(u) =
          psomp_estimate(y, sensing, dict.atoms, sparsity).hhat.col(0);
    }
    acc_mr.add(mr_combiner(hhat), h);
    acc_mmse.add(mmse_combiner(hhat, pp.power_w, pp.noise_w), h);
  }
  DropSe out;
  out.mr = acc_mr.sum_se(pp.power_w, pp.noise_w, prelog);
  out.mmse = acc_mmse.sum_se(pp.power_w, pp.noise_w, prelog);
  return out;
}

Aggregate aggregate(const std::vector<double>& samples) {
  Aggregate a;
  if (samples.empty()) return a;
  double sum = 0.0;
  for (double s : samples) sum += s;
  a.mean = sum / samples.size();
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double s : samples) ss += (s - a.mean) * (s - a.mean);
    a.stderr = std::sqrt(ss / (samples.size() - 1.0) / samples.size());
  }
  return a;
}

}  // namespace polarmimo
