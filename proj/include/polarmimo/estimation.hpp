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

#ifndef POLARMIMO_ESTIMATION_HPP
#define POLARMIMO_ESTIMATION_HPP

#include <vector>

#include "polarmimo/dictionary.hpp"
#include "polarmimo/geometry.hpp"

namespace polarmimo {

/// Channel estimation phase parameters (hybrid front-end), linear units.
struct PilotParams {
  double power_w = 0.0;  // per-UE transmit power p
  double noise_w = 0.0;  // noise power sigma^2
  int num_ue = 1;        // K
  int num_rf = 1;        // N_RF
  int num_slots = 1;     // tau, pilot slots observed per UE
};

/// Stacked analog combiner A: (tau * N_RF) x M, rows i*N_RF..(i+1)*N_RF-1
/// holding A_i^T for slot i. Entries are i.i.d. +-1/sqrt(M).
Eigen::MatrixXd generate_combiners(const ArrayGeometry& geom, int num_rf,
                                   int num_slots, Rng& rng);

/// Combined pilot noise: per slot n_i = A_i^T n~_i with n~_i circularly
/// symmetric CN(0, sigma^2 K I_M), stacked over slots. Covariance of each
/// slot block is sigma^2 K A_i^T A_i^*.
Eigen::VectorXcd pilot_noise(const Eigen::MatrixXd& comb,
                             const PilotParams& pp, Rng& rng);

/// y = sqrt(p) K A h + n.
Eigen::VectorXcd simulate_pilot(const Eigen::VectorXcd& h,
                                const Eigen::MatrixXd& comb,
                                const PilotParams& pp, Rng& rng);

/// Estimate plus diagnostics. hhat has one column per observation.
struct EstimationResult {
  Eigen::MatrixXcd hhat;
  std::vector<int> support;
  std::vector<double> residual_norms;  // Frobenius, after each iteration
};

/// P-SOMP with a precomputed sensing matrix Psi = sqrt(p) K A W. Columns of
/// y are separate observations sharing the support (jointly selected by
/// summed norm-normalized correlation magnitude). Each iteration: select the
/// best unselected atom, least-squares refit on the accumulated support, and
/// recompute the residual.
EstimationResult psomp_estimate(const Eigen::MatrixXcd& y,
                                const Eigen::MatrixXcd& sensing,
                                const Eigen::MatrixXcd& atoms, int sparsity);

/// Convenience overload building the sensing matrix from the combiner stack.
EstimationResult psomp_estimate(const Eigen::MatrixXcd& y,
                                const Eigen::MatrixXd& comb,
                                const Dictionary& dict,
                                const PilotParams& pp, int sparsity = 1);

/// ||hhat - h||^2 / ||h||^2. Throws on zero h.
double nmse(const Eigen::VectorXcd& hhat, const Eigen::VectorXcd& h);

}  // namespace polarmimo

#endif  // POLARMIMO_ESTIMATION_HPP
