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

#include "polarmimo/estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace polarmimo {

Eigen::MatrixXd generate_combiners(const ArrayGeometry& geom, int num_rf,
                                   int num_slots, Rng& rng) {
  if (num_rf < 1 || num_slots < 1) {
    throw std::invalid_argument("generate_combiners: need num_rf, slots >= 1");
  }
  const int m = geom.num_antennas;
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  Eigen::MatrixXd comb(num_slots * num_rf, m);
  // Row-major fill so the draw order matches the stacked layout.
  for (Eigen::Index r = 0; r < comb.rows(); ++r) {
    for (Eigen::Index c = 0; c < comb.cols(); ++c) {
      comb(r, c) = rng.sign() * scale;
    }
  }
  return comb;
}

Eigen::VectorXcd pilot_noise(const Eigen::MatrixXd& comb,
                             const PilotParams& pp, Rng& rng) {
  const Eigen::Index m = comb.cols();
  if (comb.rows() % pp.num_slots != 0) {
    throw std::invalid_argument("pilot_noise: combiner/slot mismatch");
  }
  const Eigen::Index num_rf = comb.rows() / pp.num_slots;
  const double var = pp.noise_w * pp.num_ue;
  Eigen::VectorXcd out(comb.rows());
  Eigen::VectorXcd slot_noise(m);
  for (int i = 0; i < pp.num_slots; ++i) {
    for (Eigen::Index a = 0; a < m; ++a) slot_noise[a] = rng.cnormal(var);
    out.segment(i * num_rf, num_rf) =
        comb.middleRows(i * num_rf, num_rf) * slot_noise;
  }
  return out;
}

Eigen::VectorXcd simulate_pilot(const Eigen::VectorXcd& h,
                                const Eigen::MatrixXd& comb,
                                const PilotParams& pp, Rng& rng) {
  if (h.size() != comb.cols()) {
    throw std::invalid_argument("simulate_pilot: dimension mismatch");
  }
  if (pp.power_w <= 0.0 || pp.noise_w < 0.0) {
    throw std::invalid_argument("simulate_pilot: bad power/noise");
  }
  Eigen::VectorXcd y = std::sqrt(pp.power_w) * pp.num_ue * (comb * h);
  if (pp.noise_w > 0.0) y += pilot_noise(comb, pp, rng);
  return y;
}

EstimationResult psomp_estimate(const Eigen::MatrixXcd& y,
                                const Eigen::MatrixXcd& sensing,
                                const Eigen::MatrixXcd& atoms, int sparsity) {
  const Eigen::Index q = sensing.cols();
  if (sparsity < 1 || sparsity > y.rows()) {
    throw std::invalid_argument("psomp_estimate: bad sparsity");
  }
  if (y.rows() != sensing.rows() || atoms.cols() != q) {
    throw std::invalid_argument("psomp_estimate: dimension mismatch");
  }
  const Eigen::VectorXd col_norms = sensing.colwise().norm();

  EstimationResult res;
  Eigen::MatrixXcd residual = y;
  Eigen::MatrixXcd sub(sensing.rows(), 0);
  for (int it = 0; it < sparsity; ++it) {
    // Summed norm-normalized correlation against the residual(s).
    Eigen::VectorXd score =
        (sensing.adjoint() * residual).cwiseAbs().rowwise().sum();
    score.array() /= col_norms.array().max(1e-300);
    for (int s : res.support) score[s] = -1.0;  // no duplicate selections
    Eigen::Index pick = 0;
    score.maxCoeff(&pick);
    res.support.push_back(static_cast<int>(pick));

    sub.conservativeResize(Eigen::NoChange, sub.cols() + 1);
    sub.col(sub.cols() - 1) = sensing.col(pick);
    // LS refit over the accumulated support; column-pivoted QR tolerates a
    // numerically dependent atom pair.
    const Eigen::MatrixXcd coeff = sub.colPivHouseholderQr().solve(y);
    residual = y - sub * coeff;
    res.residual_norms.push_back(residual.norm());
    res.hhat.resize(atoms.rows(), y.cols());
    res.hhat.setZero();
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(res.support.size());
         ++i) {
      res.hhat += atoms.col(res.support[i]) * coeff.row(i);
    }
  }
  return res;
}

EstimationResult psomp_estimate(const Eigen::MatrixXcd& y,
                                const Eigen::MatrixXd& comb,
                                const Dictionary& dict, const PilotParams& pp,
                                int sparsity) {
  const Eigen::MatrixXcd sensing =
      std::sqrt(pp.power_w) * pp.num_ue * (comb * dict.atoms);
  return psomp_estimate(y, sensing, dict.atoms, sparsity);
}

double nmse(const Eigen::VectorXcd& hhat, const Eigen::VectorXcd& h) {
  if (hhat.size() != h.size()) {
    throw std::invalid_argument("nmse: length mismatch");
  }
  const double denom = h.squaredNorm();
  if (denom == 0.0) throw std::invalid_argument("nmse: zero channel");
  return (hhat - h).squaredNorm() / denom;
}

}  // namespace polarmimo
