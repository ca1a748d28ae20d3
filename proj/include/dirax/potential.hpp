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
#include <vector>

#include "dirax/types.hpp"

namespace dirax {

enum class PotentialKind { constant, polynomial, sinusoidal, sampled };

/// f_mu(t) = amplitude * sin(omega*t + phase) + offset.
struct SinusoidComponent {
  Complex amplitude{0.0, 0.0};
  double omega = 0.0;
  double phase = 0.0;
  Complex offset{0.0, 0.0};
};

/// Time-dependent Pauli-vector potential V(t) = sum_mu f_mu(t) sigma_mu.
///
/// A spec flagged `hermitian` promises Hermitian V at every queried t; the
/// promise is checked at evaluation time (||V - V^dag||_max <= 1e-12) and a
/// violation throws NonHermitian. Sampled specs interpolate linearly between
/// the nodes of a uniform grid and reject queries outside it.
struct PotentialSpec {
  PotentialKind kind = PotentialKind::constant;
  bool hermitian = false;

  FourVector constant{FourVector::Zero()};

  // polynomial: f_mu(t) = sum_k poly[mu][k] t^k
  std::array<std::vector<Complex>, 4> poly;

  std::array<SinusoidComponent, 4> sinusoid;

  TimeGrid grid;
  std::vector<FourVector> samples;
};

PotentialSpec constant_potential(const FourVector& f);
PotentialSpec polynomial_potential(std::array<std::vector<Complex>, 4> coeffs);
PotentialSpec sinusoidal_potential(std::array<SinusoidComponent, 4> comps);
PotentialSpec sampled_potential(const TimeGrid& grid,
                                std::vector<FourVector> samples);

/// Pauli components f(t); for the sampled kind throws OutOfDomain when t is
/// outside the grid (with a 1e-9-relative boundary slack).
FourVector evaluate_components(const PotentialSpec& spec, double t);

/// pauli_compose(f(t)), with the hermitian-flag check applied.
Matrix2 evaluate_potential(const PotentialSpec& spec, double t);

}  // namespace dirax
