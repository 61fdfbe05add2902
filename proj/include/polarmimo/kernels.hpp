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

#ifndef POLARMIMO_KERNELS_HPP
#define POLARMIMO_KERNELS_HPP

#include <Eigen/Dense>

namespace polarmimo {

/// Execution policy for the data-parallel kernels. kSerial is the plain
/// reference implementation kept for testing; kParallel uses OpenMP.
/// Both produce identical results (reductions are max or per-item).
enum class ExecPolicy { kSerial, kParallel };

/// out[n] = max_q |atoms.col(q)^H probes.col(n)|^2.
/// Columns of both matrices are expected unit-norm, so the result is the
/// squared normalized correlation against the best-matching atom.
void best_match_power(const Eigen::MatrixXcd& atoms,
                      const Eigen::MatrixXcd& probes, Eigen::VectorXd& out,
                      ExecPolicy policy = ExecPolicy::kParallel);

/// Largest off-diagonal |a_i^H a_j| over unit-norm columns. The scan runs
/// in single precision (blocked Gram products) and the winning pair is
/// re-evaluated in double.
double gram_max_offdiagonal(const Eigen::MatrixXcd& atoms,
                            ExecPolicy policy = ExecPolicy::kParallel);

}  // namespace polarmimo

#endif  // POLARMIMO_KERNELS_HPP
