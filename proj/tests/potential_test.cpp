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

#include "dirax/potential.hpp"

#include <doctest.h>

#include "dirax/errors.hpp"
#include "dirax/pauli.hpp"

using namespace dirax;

TEST_CASE("constant potential evaluates everywhere") {
  const PotentialSpec zero = constant_potential(FourVector::Zero());
  CHECK(max_abs(evaluate_potential(zero, -3.0)) == 0.0);
  CHECK(max_abs(evaluate_potential(zero, 1e6)) == 0.0);
  CHECK(zero.hermitian);
}

TEST_CASE("polynomial f1(t) = t^2 at t = 2 gives 4 sigma_1") {
  std::array<std::vector<Complex>, 4> coeffs;
  coeffs[1] = {0.0, 0.0, 1.0};  // t^2
  const PotentialSpec spec = polynomial_potential(coeffs);
  CHECK(spec.hermitian);
  CHECK(max_abs(evaluate_potential(spec, 2.0) - 4.0 * sigma(1)) <= 1e-15);
}

TEST_CASE("sampled potential interpolates linearly and rejects outside") {
  const TimeGrid grid{0.0, 1.0, 2};
  std::vector<FourVector> nodes(2, FourVector::Zero());
  nodes[1][1] = 1.0;
  const PotentialSpec spec = sampled_potential(grid, nodes);
  CHECK(max_abs(evaluate_potential(spec, 0.5) - 0.5 * sigma(1)) <= 1e-15);
  CHECK(max_abs(evaluate_potential(spec, 0.0)) == 0.0);
  CHECK(max_abs(evaluate_potential(spec, 1.0) - sigma(1)) == 0.0);
  CHECK_THROWS_AS(evaluate_potential(spec, 1.5), OutOfDomain);
  CHECK_THROWS_AS(evaluate_potential(spec, -0.5), OutOfDomain);
}

TEST_CASE("sinusoidal component evaluates amplitude*sin(omega t + phase) + offset") {
  std::array<SinusoidComponent, 4> comps;
  comps[1] = SinusoidComponent{0.3, 1.0, 0.0, 0.0};
  const PotentialSpec spec = sinusoidal_potential(comps);
  const FourVector f = evaluate_components(spec, 2.0);
  CHECK(std::abs(f[1] - 0.3 * std::sin(2.0)) <= 1e-15);
  CHECK(std::abs(f[0]) == 0.0);
}

TEST_CASE("hermitian flag tracks complex components") {
  FourVector f = FourVector::Zero();
  f[2] = Complex(0.0, 0.25);
  const PotentialSpec spec = constant_potential(f);
  CHECK_FALSE(spec.hermitian);
}

TEST_CASE("hermitian-flagged spec failing the check throws") {
  FourVector f = FourVector::Zero();
  f[1] = Complex(0.0, 0.5);
  PotentialSpec spec = constant_potential(f);
  spec.hermitian = true;  // force a wrong flag
  CHECK_THROWS_AS(evaluate_potential(spec, 0.0), NonHermitian);
}

TEST_CASE("make_grid validates the step count") {
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 0.3), BadGrid);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, -0.1), BadGrid);
  CHECK_THROWS_AS(make_grid(0.0, 0.5, 1.0), BadGrid);
  const TimeGrid g = make_grid(0.0, 1.0, 0.25);
  CHECK(g.count == 5);
  CHECK(g.node(4) == doctest::Approx(1.0));
}
