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

#include "dirax/darboux.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirax/errors.hpp"
#include "dirax/pauli.hpp"

namespace dirax {

namespace {

inline Matrix2 columns(const Spinor& a, const Spinor& b) {
  Matrix2 m;
  m.col(0) = a;
  m.col(1) = b;
  return m;
}

inline Complex det2(const Matrix2& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

inline Matrix2 inverse2(const Matrix2& m, const Complex& det) {
  Matrix2 inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return inv / det;
}

// u'(t_k) from the seed equation, exact given the node values.
inline Matrix2 seed_derivative(const Matrix2& u, const Matrix2& v0,
                               double lambda1, double lambda2) {
  Matrix2 rhs = v0 * u;
  rhs.col(0) -= lambda1 * u.col(0);
  rhs.col(1) -= lambda2 * u.col(1);
  rhs.row(0) *= iu;  // i sigma_z
  rhs.row(1) *= -iu;
  return rhs;
}

// Minimum modulus of the linear segment d(s) = a + s (b - a), s in [0, 1],
// and the minimizing s. Catches det-u zeros crossed between grid nodes.
std::pair<double, double> segment_min_modulus(const Complex& a,
                                              const Complex& b) {
  const Complex diff = b - a;
  const double denom = std::norm(diff);
  double s = 0.0;
  if (denom > 0.0) {
    s = std::clamp(-(std::conj(a) * diff).real() / denom, 0.0, 1.0);
  }
  return {std::abs(a + s * diff), s};
}

void check_guard(const DarbouxSeed& seed) {
  const TimeGrid& grid = seed.grid();
  std::vector<Complex> dets(grid.count);
  std::vector<double> scales(grid.count);  // ||u||_max^2 per node
  for (Eigen::Index k = 0; k < grid.count; ++k) {
    const Matrix2 u = seed.u_at(k);
    dets[k] = det2(u);
    const double n = max_abs(u);
    scales[k] = n * n;
  }
  for (Eigen::Index k = 0; k < grid.count; ++k) {
    if (std::abs(dets[k]) <= seed.singular_guard * scales[k]) {
      const double t = grid.node(k);
      throw SingularSeed(t, "seed matrix u(t) singular at t = " +
                                std::to_string(t) + " (|det u| = " +
                                std::to_string(std::abs(dets[k])) + ")");
    }
    if (k + 1 < grid.count) {
      const auto [dmin, s] = segment_min_modulus(dets[k], dets[k + 1]);
      const double scale = (1.0 - s) * scales[k] + s * scales[k + 1];
      if (dmin <= seed.singular_guard * scale) {
        const double t = grid.node(k) + s * grid.step;
        throw SingularSeed(t, "seed matrix u(t) crosses singular near t = " +
                                  std::to_string(t) +
                                  " (interpolated |det u| = " +
                                  std::to_string(dmin) + ")");
      }
    }
  }
}

}  // namespace

Matrix2 DarbouxSeed::u_at(Eigen::Index k) const {
  return columns(traj1.states[k], traj2.states[k]);
}

DarbouxSeed build_seed(const PotentialSpec& v0, double lambda1,
                       const Spinor& psi1_0, double lambda2,
                       const Spinor& psi2_0, double t0, double t1, double h,
                       double singular_guard) {
  if (std::abs(lambda1 - lambda2) <= 1e-9) {
    throw DegenerateEigenvalues("seed eigenvalues coincide: lambda1 = " +
                                std::to_string(lambda1) + ", lambda2 = " +
                                std::to_string(lambda2));
  }
  DarbouxSeed seed;
  seed.base = v0;
  seed.lambda1 = lambda1;
  seed.lambda2 = lambda2;
  seed.singular_guard = singular_guard;
  seed.traj1 = integrate_stationary(v0, lambda1, psi1_0, t0, t1, h);
  seed.traj2 = integrate_stationary(v0, lambda2, psi2_0, t0, t1, h);
  check_guard(seed);
  return seed;
}

DarbouxSeed seed_for_sigma(int axis, const PotentialSpec& v0, double lambda,
                           double t0, double t1, double h,
                           double singular_guard) {
  if (!(lambda > 0.0)) {
    throw BadConfig("seed_for_sigma requires lambda > 0");
  }
  const double r = 1.0 / std::sqrt(2.0);
  Spinor plus, minus;
  switch (axis) {
    case 1:
      plus << r, r;
      minus << r, -r;
      break;
    case 2:
      plus << r, iu * r;
      minus << r, -iu * r;
      break;
    case 3:
      plus << 1.0, 0.0;
      minus << 0.0, 1.0;
      break;
    default:
      throw BadConfig("sigma axis must be 1, 2 or 3");
  }
  return build_seed(v0, lambda, plus, -lambda, minus, t0, t1, h,
                    singular_guard);
}

std::vector<Matrix2> generator_U(const DarbouxSeed& seed) {
  const TimeGrid& grid = seed.grid();
  std::vector<Matrix2> out(grid.count);
  for (Eigen::Index k = 0; k < grid.count; ++k) {
    const Matrix2 u = seed.u_at(k);
    const Complex det = det2(u);
    const double scale = max_abs(u);
    if (std::abs(det) <= seed.singular_guard * scale * scale) {
      const double t = grid.node(k);
      throw SingularSeed(t, "seed inversion ill-conditioned at t = " +
                                std::to_string(t));
    }
    const Matrix2 v0 = pauli_compose(seed.traj1.potential_samples[k]);
    const Matrix2 du = seed_derivative(u, v0, seed.lambda1, seed.lambda2);
    out[k] = du * inverse2(u, det);
  }
  return out;
}

DarbouxResult delta_V(const DarbouxSeed& seed) {
  DarbouxResult res;
  res.grid = seed.grid();
  res.u_series = generator_U(seed);
  res.eigenvalues = {seed.lambda1, seed.lambda2};

  const Matrix2& sz = sigma(3);
  res.delta_v_series.resize(res.u_series.size());
  std::vector<FourVector> v1_samples(res.u_series.size());
  for (std::size_t k = 0; k < res.u_series.size(); ++k) {
    const Matrix2 dv = iu * commutator(sz, res.u_series[k]);
    res.delta_v_series[k] = pauli_decompose(dv);
    v1_samples[k] = seed.traj1.potential_samples[k] + res.delta_v_series[k];
  }
  res.v1_spec = sampled_potential(res.grid, std::move(v1_samples));
  return res;
}

Trajectory intertwine(const DarbouxSeed& seed, const Trajectory& traj) {
  if (!same_grid(seed.grid(), traj.grid)) {
    throw GridMismatch("trajectory grid differs from the seed grid");
  }
  const std::vector<Matrix2> u_series = generator_U(seed);

  Trajectory out;
  out.grid = traj.grid;
  out.epsilon = traj.epsilon;  // Darboux preserves the eigenvalue
  out.states.resize(traj.states.size());
  out.potential_samples.resize(traj.states.size());

  const Matrix2& sz = sigma(3);
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const Matrix2 v0 = pauli_compose(traj.potential_samples[k]);
    Matrix2 gen = v0 - traj.epsilon * Matrix2::Identity();
    gen.row(0) *= iu;
    gen.row(1) *= -iu;
    const Spinor dpsi = gen * traj.states[k];
    out.states[k] = dpsi - u_series[k] * traj.states[k];
    out.potential_samples[k] =
        traj.potential_samples[k] +
        pauli_decompose(iu * commutator(sz, u_series[k]));
  }
  return out;
}

ResidualReport verify_intertwining(const DarbouxSeed& seed,
                                   const Trajectory& traj) {
  const Trajectory lpsi = intertwine(seed, traj);
  const TimeGrid& grid = lpsi.grid;

  double lpsi_scale = 0.0;
  double input_scale = 0.0;
  for (std::size_t k = 0; k < lpsi.states.size(); ++k) {
    lpsi_scale = std::max(lpsi_scale, lpsi.states[k].norm());
    input_scale = std::max(input_scale, traj.states[k].norm());
  }

  ResidualReport report;
  if (lpsi_scale <= 1e-10 * input_scale) {
    report.zero_output = true;
    return report;
  }

  const double inv_2h = 1.0 / (2.0 * grid.step);
  double sum = 0.0;
  report.node_rel.reserve(grid.count > 2 ? grid.count - 2 : 0);
  for (Eigen::Index k = 1; k + 1 < grid.count; ++k) {
    Spinor deriv = (lpsi.states[k + 1] - lpsi.states[k - 1]) * inv_2h;
    deriv[0] *= iu;  // i sigma_z
    deriv[1] *= -iu;
    const Matrix2 v1 = pauli_compose(lpsi.potential_samples[k]);
    const Spinor r =
        deriv + v1 * lpsi.states[k] - lpsi.epsilon * lpsi.states[k];
    const double rel = r.norm() / lpsi_scale;
    report.node_rel.push_back(rel);
    report.max_rel = std::max(report.max_rel, rel);
    sum += rel;
  }
  if (!report.node_rel.empty()) {
    report.mean_rel = sum / static_cast<double>(report.node_rel.size());
  }
  return report;
}

}  // namespace dirax
