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

#include "dirax/dirac.hpp"

#include <cmath>

#include "dirax/errors.hpp"
#include "dirax/pauli.hpp"

namespace dirax {

namespace {

// i sigma_z (V - eps): row 0 scaled by +i, row 1 by -i.
inline Matrix2 twisted_generator(const Matrix2& v, double eps) {
  Matrix2 a = v - eps * Matrix2::Identity();
  a.row(0) *= iu;
  a.row(1) *= -iu;
  return a;
}

// -i (V - eps), the Schroedinger generator.
inline Matrix2 schrodinger_generator(const Matrix2& v, double eps) {
  return -iu * (v - eps * Matrix2::Identity());
}

template <class State, class Gen>
State rk4_step(const State& y, double t, double h, const PotentialSpec& spec,
               double eps, Gen&& gen) {
  const auto rhs = [&](double s, const State& x) -> State {
    return gen(evaluate_potential(spec, s), eps) * x;
  };
  const State k1 = rhs(t, y);
  const State k2 = rhs(t + 0.5 * h, State(y + 0.5 * h * k1));
  const State k3 = rhs(t + 0.5 * h, State(y + 0.5 * h * k2));
  const State k4 = rhs(t + h, State(y + h * k3));
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

template <class Gen>
Trajectory integrate(const PotentialSpec& spec, double eps, const Spinor& psi0,
                     double t0, double t1, double h, Gen&& gen,
                     bool normalize = false) {
  const TimeGrid grid = make_grid(t0, t1, h);
  Trajectory traj;
  traj.grid = grid;
  traj.epsilon = eps;
  traj.states.reserve(grid.count);
  traj.potential_samples.reserve(grid.count);

  Spinor psi = psi0;
  if (normalize && psi.norm() > 0.0) psi /= psi.norm();
  traj.states.push_back(psi);
  traj.potential_samples.push_back(evaluate_components(spec, grid.node(0)));
  for (Eigen::Index k = 0; k + 1 < grid.count; ++k) {
    psi = rk4_step(psi, grid.node(k), h, spec, eps, gen);
    if (normalize) {
      const double n = psi.norm();
      if (n > 0.0 && std::isfinite(n)) psi /= n;
    }
    traj.states.push_back(psi);
    traj.potential_samples.push_back(
        evaluate_components(spec, grid.node(k + 1)));
  }
  return traj;
}

template <class Gen>
Matrix2 propagate(const PotentialSpec& spec, double eps, double t0, double t1,
                  double h, Gen&& gen) {
  const TimeGrid grid = make_grid(t0, t1, h);
  Matrix2 phi = Matrix2::Identity();
  for (Eigen::Index k = 0; k + 1 < grid.count; ++k) {
    phi = rk4_step(phi, grid.node(k), h, spec, eps, gen);
  }
  return phi;
}

}  // namespace

Spinor stationary_rhs(const PotentialSpec& spec, double eps, double t,
                      const Spinor& psi) {
  return twisted_generator(evaluate_potential(spec, t), eps) * psi;
}

Trajectory integrate_stationary(const PotentialSpec& spec, double eps,
                                const Spinor& psi0, double t0, double t1,
                                double h) {
  return integrate(spec, eps, psi0, t0, t1, h,
                   [](const Matrix2& v, double e) { return twisted_generator(v, e); });
}

Matrix2 fundamental_matrix(const PotentialSpec& spec, double eps, double t0,
                           double t1, double h) {
  return propagate(spec, eps, t0, t1, h,
                   [](const Matrix2& v, double e) { return twisted_generator(v, e); });
}

Trajectory integrate_schrodinger(const PotentialSpec& spec, double eps,
                                 const Spinor& psi0, double t0, double t1,
                                 double h) {
  return integrate(spec, eps, psi0, t0, t1, h, [](const Matrix2& v, double e) {
    return schrodinger_generator(v, e);
  });
}

Trajectory integrate_schrodinger_normalized(const PotentialSpec& spec,
                                            double eps, const Spinor& psi0,
                                            double t0, double t1, double h) {
  return integrate(
      spec, eps, psi0, t0, t1, h,
      [](const Matrix2& v, double e) { return schrodinger_generator(v, e); },
      /*normalize=*/true);
}

Matrix2 schrodinger_propagator(const PotentialSpec& spec, double t0, double t1,
                               double h) {
  return propagate(spec, 0.0, t0, t1, h, [](const Matrix2& v, double e) {
    return schrodinger_generator(v, e);
  });
}

PopulationSeries populations(const Trajectory& traj) {
  PopulationSeries out;
  out.p_up.reserve(traj.states.size());
  out.p_down.reserve(traj.states.size());
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const double up = std::norm(traj.states[k][0]);
    const double down = std::norm(traj.states[k][1]);
    const double total = up + down;
    if (!(total > 0.0) || !std::isfinite(total)) {
      throw ZeroState("zero or non-finite state norm at node " +
                      std::to_string(k));
    }
    out.p_up.push_back(up / total);
    out.p_down.push_back(down / total);
  }
  return out;
}

}  // namespace dirax
