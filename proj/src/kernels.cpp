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

#include "polarmimo/kernels.hpp"

#include <algorithm>
#include <complex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polarmimo {

namespace {

// Probe-block width for the GEMM-based correlation scan. Keeps the
// atoms^H * block product inside L2 for typical Q of a few thousand.
constexpr int kProbeBlock = 256;

void best_match_power_serial(const Eigen::MatrixXcd& atoms,
                             const Eigen::MatrixXcd& probes,
                             Eigen::VectorXd& out) {
  const Eigen::Index n = probes.cols();
  for (Eigen::Index j = 0; j < n; j += kProbeBlock) {
    const Eigen::Index w = std::min<Eigen::Index>(kProbeBlock, n - j);
    const Eigen::MatrixXcd corr =
        atoms.adjoint() * probes.middleCols(j, w);
    for (Eigen::Index c = 0; c < w; ++c) {
      out[j + c] = corr.col(c).cwiseAbs2().maxCoeff();
    }
  }
}

}  // namespace

void best_match_power(const Eigen::MatrixXcd& atoms,
                      const Eigen::MatrixXcd& probes, Eigen::VectorXd& out,
                      ExecPolicy policy) {
  const Eigen::Index n = probes.cols();
  out.resize(n);
  if (policy == ExecPolicy::kSerial) {
    best_match_power_serial(atoms, probes, out);
    return;
  }
  const Eigen::Index blocks = (n + kProbeBlock - 1) / kProbeBlock;
#pragma omp parallel for schedule(dynamic)
  for (Eigen::Index b = 0; b < blocks; ++b) {
    const Eigen::Index j = b * kProbeBlock;
    const Eigen::Index w = std::min<Eigen::Index>(kProbeBlock, n - j);
    const Eigen::MatrixXcd corr = atoms.adjoint() * probes.middleCols(j, w);
    for (Eigen::Index c = 0; c < w; ++c) {
      out[j + c] = corr.col(c).cwiseAbs2().maxCoeff();
    }
  }
}

double gram_max_offdiagonal(const Eigen::MatrixXcd& atoms, ExecPolicy policy) {
  const Eigen::Index q = atoms.cols();
  const Eigen::MatrixXcf af = atoms.cast<std::complex<float>>();

  // One block-row of the upper Gram triangle per task.
  constexpr Eigen::Index kBlock = 512;
  const Eigen::Index blocks = (q + kBlock - 1) / kBlock;

  float best = -1.0f;
  Eigen::Index best_i = 0, best_j = 1;

#pragma omp parallel if (policy == ExecPolicy::kParallel)
  {
    float loc_best = -1.0f;
    Eigen::Index loc_i = 0, loc_j = 1;
#pragma omp for schedule(dynamic) nowait
    for (Eigen::Index bi = 0; bi < blocks; ++bi) {
      const Eigen::Index i0 = bi * kBlock;
      const Eigen::Index iw = std::min(kBlock, q - i0);
      const Eigen::MatrixXcf gram =
          af.middleCols(i0, iw).adjoint() * af.rightCols(q - i0);
      for (Eigen::Index r = 0; r < iw; ++r) {
        // Skip the diagonal entry (column r within this block row).
        for (Eigen::Index c = r + 1; c < gram.cols(); ++c) {
          const float v = std::norm(gram(r, c));
          if (v > loc_best) {
            loc_best = v;
            loc_i = i0 + r;
            loc_j = i0 + c;
          }
        }
      }
    }
#pragma omp critical
    {
      if (loc_best > best ||
          (loc_best == best && (loc_i < best_i ||
                                (loc_i == best_i && loc_j < best_j)))) {
        best = loc_best;
        best_i = loc_i;
        best_j = loc_j;
      }
    }
  }

  // Double-precision value for the winning pair.
  return std::abs(atoms.col(best_i).dot(atoms.col(best_j)));
}

}  // namespace polarmimo
