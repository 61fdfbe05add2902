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

#ifndef POLARMIMO_EVALUATION_HPP
#define POLARMIMO_EVALUATION_HPP

#include <vector>

#include "polarmimo/channel.hpp"
#include "polarmimo/estimation.hpp"

namespace polarmimo {

/// Maximum-ratio combiner: v_k = hhat_k.
Eigen::MatrixXcd mr_combiner(const Eigen::MatrixXcd& hhat);

/// MMSE combiner: v_k = p (p sum_i hhat_i hhat_i^H + sigma^2 I)^{-1} hhat_k.
Eigen::MatrixXcd mmse_combiner(const Eigen::MatrixXcd& hhat, double power_w,
                               double noise_w);

/// Sum spectral efficiencies of one drop, both combiners.
struct DropSe {
  double mr = 0.0;    // bit/s/Hz
  double mmse = 0.0;  // bit/s/Hz
};

/// Use-and-then-forget sum SE for fixed UE positions. Expectations are
/// Monte-Carlo over combiner stacks and pilot noise (the LoS channels are
/// deterministic given positions): per realization the channels are
/// re-estimated with P-SOMP and both combiners are formed from the same
/// estimate. SINR_k = p |E{v_k^H h_k}|^2 / (p sum_i E{|v_k^H h_i|^2}
/// - p |E{v_k^H h_k}|^2 + sigma^2 E{||v_k||^2}); SE = prelog * sum_k
/// log2(1 + SINR_k).
DropSe uatf_drop_se(const std::vector<ScenePoint>& ue_positions,
                    const Dictionary& dict, const ArrayGeometry& geom,
                    const PilotParams& pp, int n_realizations, int sparsity,
                    double prelog, Rng& rng);

/// Mean with its standard error.
struct Aggregate {
  double mean = 0.0;
  double stderr = 0.0;
};

Aggregate aggregate(const std::vector<double>& samples);

}  // namespace polarmimo

#endif  // POLARMIMO_EVALUATION_HPP
