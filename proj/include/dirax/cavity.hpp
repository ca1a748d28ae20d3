// Copyright 2026 The dirax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "dirax/darboux.hpp"
#include "dirax/dirac.hpp"
#include "dirax/types.hpp"

namespace dirax {

// Cavity-QED experiment layer. The baseline two-level system is driven by
// V = g sigma_1 + (Delta/2) sigma_3 and evolved in the Schroedinger picture
// (i psi' = (V - eps) psi), which reproduces textbook Rabi oscillations.
// The open-loop controller D(sigma_i) Darboux-transforms the baseline
// potential via the stationary seeds and re-integrates the initial state
// under V1 = V0 + dV. Since dV is generically non-Hermitian the controlled
// evolution need not preserve the norm; populations are normalized by the
// running norm.

struct RabiConfig {
  double g = 1.0;
  double delta = 0.0;
  double epsilon = 0.0;  // global energy offset; populations are insensitive
  double t_final = 100.0;
  double h = 0.01;
  Spinor psi0{Complex(1.0, 0.0), Complex(0.0, 0.0)};
};

/// Validates g >= 0, t_final > 0, h > 0, integral step count, psi0 != 0.
/// Throws BadConfig / BadGrid.
void validate(const RabiConfig& cfg);

/// The baseline potential g sigma_1 + (Delta/2) sigma_3 as a constant
/// hermitian spec.
PotentialSpec baseline_spec(const RabiConfig& cfg);

struct InversionSeries {
  TimeGrid grid;
  std::vector<double> w;  // atomic inversion, P_up - P_down
  std::vector<double> p_up;
  std::vector<double> p_down;
  std::vector<FourVector> v1_components;
  /// Seed eigenvalues (+lambda, -lambda) for controlled runs, the
  /// transformation's output spectral data; absent for the baseline.
  std::optional<std::pair<double, double>> seed_eigenvalues;
};

InversionSeries rabi_baseline(const RabiConfig& cfg);

/// Open-loop pipeline D(sigma_axis){V, psi} -> {V1, psi1}: seed from
/// sigma_axis eigenvectors at +-lambda under the baseline potential, V1
/// from the Darboux step, then the initial state re-integrated under V1.
/// Throws SingularSeed (with the failure time) when the seed degenerates.
InversionSeries controlled_run(const RabiConfig& cfg, int axis, double lambda,
                               double singular_guard = kDefaultSingularGuard);

/// W(t) = (|c1|^2 - |c2|^2) / (|c1|^2 + |c2|^2) per node.
std::vector<double> atomic_inversion(const Trajectory& traj);

/// Ratio of the peak-to-peak amplitude of W in the last window_fraction of
/// the span to that in the first. Near 0 means total collapse, near 1
/// sustained oscillation. Flat input (first amplitude < 1e-12) returns 0 by
/// convention. Throws TooShort for series under 20 nodes or window_fraction
/// outside (0, 0.5].
double collapse_metric(const std::vector<double>& w,
                       double window_fraction = 0.1);

/// Plot-ready real/imaginary component series of V1.
struct PotentialProfile {
  std::vector<double> t;
  std::array<std::vector<double>, 4> re;
  std::array<std::vector<double>, 4> im;
};

PotentialProfile potential_profile(const InversionSeries& series);

}  // namespace dirax
