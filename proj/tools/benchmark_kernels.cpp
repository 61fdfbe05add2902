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
//
// Compares the serial reference kernels against the OpenMP variants on the
// Table-I scenario sizes and checks they agree.

#include <chrono>
#include <cstdio>

#include "polarmimo/channel.hpp"
#include "polarmimo/design.hpp"
#include "polarmimo/dictionary.hpp"

namespace {

using polarmimo::ExecPolicy;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <typename F>
double timed(const char* label, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  const double value = f();
  const double dt = seconds_since(t0);
  std::printf("%-28s %8.3f s   (value %.6g)\n", label, dt, value);
  return value;
}

}  // namespace

int main() {
  polarmimo::ArrayGeometry geom;
  geom.num_antennas = 129;
  geom.wavelength = 0.001;
  geom.spacing = 0.005;
  geom.height = 15.0;
  polarmimo::RegionOfInterest roi{5.0, 25.0, -M_PI / 3, M_PI / 3};

  polarmimo::GridDesignParams params;
  params.num_level_curves = 441;
  params.beta = 1.2854;
  const polarmimo::PolarGrid grid =
      polarmimo::build_proposed_grid(params, geom, roi);
  const polarmimo::Dictionary dict =
      polarmimo::assemble_dictionary(grid, geom);
  std::printf("grid Q = %d, M = %d\n\n", grid.size(), geom.num_antennas);

  polarmimo::Rng rng(7);
  const Eigen::MatrixXcd probes =
      polarmimo::roi_probe_channels(roi, geom, 4000, rng);

  Eigen::VectorXd out;
  const double serial_match = timed("best_match_power serial", [&] {
    polarmimo::best_match_power(dict.atoms, probes, out, ExecPolicy::kSerial);
    return out.mean();
  });
  const double parallel_match = timed("best_match_power openmp", [&] {
    polarmimo::best_match_power(dict.atoms, probes, out,
                                ExecPolicy::kParallel);
    return out.mean();
  });

  const double serial_mu = timed("gram_max_offdiagonal serial", [&] {
    return polarmimo::gram_max_offdiagonal(dict.atoms, ExecPolicy::kSerial);
  });
  const double parallel_mu = timed("gram_max_offdiagonal openmp", [&] {
    return polarmimo::gram_max_offdiagonal(dict.atoms, ExecPolicy::kParallel);
  });

  const bool ok = std::abs(serial_match - parallel_match) < 1e-12 &&
                  std::abs(serial_mu - parallel_mu) < 1e-12;
  std::printf("\nserial/openmp agreement: %s\n", ok ? "ok" : "MISMATCH");
  return ok ? 0 : 1;
}
