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

#include <utility>
#include <vector>

#include "dirax/dirac.hpp"
#include "dirax/potential.hpp"
#include "dirax/types.hpp"

namespace dirax {

// One-fold Darboux transformation of h0 = i sigma_z d/dt + V0. Two seed
// solutions psi_1, psi_2 of the stationary equation at distinct eigenvalues
// lambda_1 != lambda_2 form the column matrix u(t) = [psi_1 | psi_2]. The
// intertwiner L = d/dt - U with U = u' u^-1 annihilates the seed columns and
// maps solutions of h0 to solutions of h1 = i sigma_z d/dt + V1, where
//   V1 = V0 + i [sigma_z, U].
// Matching the psi' coefficients in L h0 = h1 L forces this form of the
// perturbing potential; verify_intertwining checks it numerically instead of
// taking it on faith.

/// Relative threshold coefficient for the det-u singularity guard:
/// |det u(t)| must exceed guard * ||u(t)||_max^2. Relative to the squared
/// seed scale so rescaling the seed does not change validity.
inline constexpr double kDefaultSingularGuard = 1e-8;

struct DarbouxSeed {
  PotentialSpec base;  // V0
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  Trajectory traj1;
  Trajectory traj2;
  double singular_guard = kDefaultSingularGuard;

  const TimeGrid& grid() const { return traj1.grid; }
  /// u(t_k) = [psi_1(t_k) | psi_2(t_k)].
  Matrix2 u_at(Eigen::Index k) const;
};

struct DarbouxResult {
  TimeGrid grid;
  std::vector<Matrix2> u_series;          // generator U(t) per node
  std::vector<FourVector> delta_v_series; // dV(t) = i [sigma_z, U(t)]
  PotentialSpec v1_spec;                  // sampled V0 + dV on the seed grid
  std::pair<double, double> eigenvalues;  // the seed spectral data (lambda1, lambda2)
};

/// Residuals of h1 (L psi) = eps (L psi), relative to max_t ||L psi||.
/// zero_output flags the annihilation case ||L psi|| ~ 0 where the relative
/// residual is undefined.
struct ResidualReport {
  double max_rel = 0.0;
  double mean_rel = 0.0;
  bool zero_output = false;
  /// Per-interior-node relative residuals (endpoints excluded); empty when
  /// zero_output.
  std::vector<double> node_rel;
};

/// Integrates the two seed solutions and validates the determinant guard at
/// every node and across every inter-node segment (a transversal zero of
/// det u between nodes is flagged at the interpolated crossing time).
/// Throws DegenerateEigenvalues when |lambda1 - lambda2| <= 1e-9 and
/// SingularSeed(t*) on a guard violation.
DarbouxSeed build_seed(const PotentialSpec& v0, double lambda1,
                       const Spinor& psi1_0, double lambda2,
                       const Spinor& psi2_0, double t0, double t1, double h,
                       double singular_guard = kDefaultSingularGuard);

/// Canonical seed of the controller D(sigma_axis): initial conditions are
/// the two orthonormal eigenvectors of sigma_axis, at eigenvalues +lambda
/// and -lambda. Requires lambda > 0 and axis in {1, 2, 3}.
DarbouxSeed seed_for_sigma(int axis, const PotentialSpec& v0, double lambda,
                           double t0, double t1, double h,
                           double singular_guard = kDefaultSingularGuard);

/// U(t) = u'(t) u(t)^-1 per node, with u' reconstructed algebraically from
/// the seed equation u' = i sigma_z (V0 u - u Lambda), never by finite
/// differencing.
std::vector<Matrix2> generator_U(const DarbouxSeed& seed);

/// The transformed system: U series, dV = i [sigma_z, U] decomposed into
/// Pauli components, and V1 = V0 + dV as a sampled potential on the seed
/// grid.
DarbouxResult delta_V(const DarbouxSeed& seed);

/// L psi = psi' - U psi with psi' = i sigma_z (V0 - eps) psi substituted
/// algebraically. The returned trajectory keeps eps and carries V1 samples.
/// Throws GridMismatch when traj is not on the seed grid. When eps collides
/// with a seed eigenvalue the output may be the zero trajectory; the
/// verifier reports that case as zero_output.
Trajectory intertwine(const DarbouxSeed& seed, const Trajectory& traj);

/// r(t) = i sigma_z (L psi)' + V1 (L psi) - eps (L psi) with (L psi)' by
/// central differences on the grid interior; endpoints excluded.
ResidualReport verify_intertwining(const DarbouxSeed& seed,
                                   const Trajectory& traj);

}  // namespace dirax
