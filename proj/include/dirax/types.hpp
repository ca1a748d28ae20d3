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

#include <complex>

#include <Eigen/Dense>

namespace dirax {

using Complex = std::complex<double>;

/// 2x2 complex matrix. Houses Hamiltonians, potentials, propagators and gates.
using Matrix2 = Eigen::Matrix2cd;

/// Two-component complex state.
using Spinor = Eigen::Vector2cd;

/// Pauli coefficients (f0, f1, f2, f3) of V = sum_mu f_mu sigma_mu.
/// Real f1..f3 with f0 = 0 is the Euclidean Bloch-sphere case; fully
/// complex entries give the Minkowskian case.
using FourVector = Eigen::Vector4cd;

/// Real (d0; d1, d2, d3) field direction, scalar part first.
using Direction4 = Eigen::Vector4d;

inline constexpr Complex iu{0.0, 1.0};

/// Largest entry magnitude, the max-norm used by all entrywise tolerances.
inline double max_abs(const Matrix2& m) { return m.cwiseAbs().maxCoeff(); }

inline bool is_hermitian(const Matrix2& m, double tol = 1e-12) {
  return max_abs(m - m.adjoint()) <= tol;
}

/// Uniform time grid t_k = start + k*step, k = 0 .. count-1.
struct TimeGrid {
  double start = 0.0;
  double step = 0.0;
  Eigen::Index count = 0;

  double node(Eigen::Index k) const {
    return start + static_cast<double>(k) * step;
  }
  double end() const { return node(count - 1); }
  double span() const { return static_cast<double>(count - 1) * step; }
};

/// Builds the grid covering [t0, t1] with step h.
/// Requires h > 0 and (t1 - t0)/h within 1e-9 of an integer >= 1.
/// Throws BadGrid otherwise.
TimeGrid make_grid(double t0, double t1, double h);

inline bool same_grid(const TimeGrid& a, const TimeGrid& b) {
  return a.count == b.count && a.start == b.start && a.step == b.step;
}

}  // namespace dirax
