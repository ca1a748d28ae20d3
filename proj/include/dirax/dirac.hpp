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

#include <vector>

#include "dirax/potential.hpp"
#include "dirax/types.hpp"

namespace dirax {

// One-dimensional Dirac operator h = i sigma_z d/dt + V(t). The stationary
// equation h psi = eps psi rearranges to the first-order form
//   psi' = i sigma_z (V(t) - eps) psi,
// using (i sigma_z)^-1 = -i sigma_z. This flow is norm-preserving only when
// V commutes with sigma_z; populations are therefore normalized by the
// running norm downstream.

/// State trajectory on a uniform grid, carrying the stationary eigenvalue
/// and the potential components sampled at the nodes.
struct Trajectory {
  TimeGrid grid;
  double epsilon = 0.0;
  std::vector<Spinor> states;
  std::vector<FourVector> potential_samples;
};

/// Right-hand side of the stationary first-order form at (t, psi).
Spinor stationary_rhs(const PotentialSpec& spec, double eps, double t,
                      const Spinor& psi);

/// Classical fixed-step RK4 over [t0, t1]; node 0 is psi0 exactly.
Trajectory integrate_stationary(const PotentialSpec& spec, double eps,
                                const Spinor& psi0, double t0, double t1,
                                double h);

/// Matrix solution of Phi' = i sigma_z (V - eps) Phi, Phi(t0) = identity;
/// returns Phi(t1).
Matrix2 fundamental_matrix(const PotentialSpec& spec, double eps, double t0,
                           double t1, double h);

// Schroedinger picture i psi' = (V(t) - eps) psi. Unitary for Hermitian V;
// the eps offset only contributes a global phase. Used by the cavity runs
// and the gate propagator, where the potential acts as the Hamiltonian.

Trajectory integrate_schrodinger(const PotentialSpec& spec, double eps,
                                 const Spinor& psi0, double t0, double t1,
                                 double h);

/// Same dynamics, but tracks only the ray of the state: every stored node is
/// rescaled to unit norm. Populations and inversion are unaffected, and
/// non-Hermitian potentials cannot drive the amplitudes out of double range
/// on long runs.
Trajectory integrate_schrodinger_normalized(const PotentialSpec& spec,
                                            double eps, const Spinor& psi0,
                                            double t0, double t1, double h);

/// Solution of i dU/dt = V(t) U, U(t0) = identity; returns U(t1).
Matrix2 schrodinger_propagator(const PotentialSpec& spec, double t0, double t1,
                               double h);

struct PopulationSeries {
  std::vector<double> p_up;
  std::vector<double> p_down;
};

/// Normalized level populations per node; throws ZeroState on a zero-norm
/// state.
PopulationSeries populations(const Trajectory& traj);

}  // namespace dirax
