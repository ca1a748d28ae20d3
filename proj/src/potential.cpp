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

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dirax/errors.hpp"
#include "dirax/pauli.hpp"

namespace dirax {

namespace {

bool real_coeffs(const std::array<std::vector<Complex>, 4>& coeffs) {
  for (const auto& cs : coeffs) {
    for (const Complex& c : cs) {
      if (std::abs(c.imag()) > 1e-12) return false;
    }
  }
  return true;
}

bool real_sinusoids(const std::array<SinusoidComponent, 4>& comps) {
  for (const auto& s : comps) {
    if (std::abs(s.amplitude.imag()) > 1e-12 ||
        std::abs(s.offset.imag()) > 1e-12) {
      return false;
    }
  }
  return true;
}

}  // namespace

PotentialSpec constant_potential(const FourVector& f) {
  PotentialSpec spec;
  spec.kind = PotentialKind::constant;
  spec.constant = f;
  spec.hermitian = components_real(f);
  return spec;
}

PotentialSpec polynomial_potential(std::array<std::vector<Complex>, 4> coeffs) {
  PotentialSpec spec;
  spec.kind = PotentialKind::polynomial;
  spec.hermitian = real_coeffs(coeffs);
  spec.poly = std::move(coeffs);
  return spec;
}

PotentialSpec sinusoidal_potential(std::array<SinusoidComponent, 4> comps) {
  PotentialSpec spec;
  spec.kind = PotentialKind::sinusoidal;
  spec.hermitian = real_sinusoids(comps);
  spec.sinusoid = comps;
  return spec;
}

PotentialSpec sampled_potential(const TimeGrid& grid,
                                std::vector<FourVector> samples) {
  if (grid.count < 2 || !(grid.step > 0.0)) {
    throw BadGrid("sampled potential needs a uniform grid with >= 2 nodes");
  }
  if (static_cast<Eigen::Index>(samples.size()) != grid.count) {
    throw BadGrid("sampled potential: node count mismatch");
  }
  PotentialSpec spec;
  spec.kind = PotentialKind::sampled;
  spec.grid = grid;
  spec.hermitian = std::all_of(samples.begin(), samples.end(),
                               [](const FourVector& f) { return components_real(f); });
  spec.samples = std::move(samples);
  return spec;
}

FourVector evaluate_components(const PotentialSpec& spec, double t) {
  switch (spec.kind) {
    case PotentialKind::constant:
      return spec.constant;

    case PotentialKind::polynomial: {
      FourVector f = FourVector::Zero();
      for (int mu = 0; mu < 4; ++mu) {
        const auto& cs = spec.poly[mu];
        Complex acc{0.0, 0.0};
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * t + *it;
        f[mu] = acc;
      }
      return f;
    }

    case PotentialKind::sinusoidal: {
      FourVector f = FourVector::Zero();
      for (int mu = 0; mu < 4; ++mu) {
        const auto& s = spec.sinusoid[mu];
        f[mu] = s.amplitude * std::sin(s.omega * t + s.phase) + s.offset;
      }
      return f;
    }

    case PotentialKind::sampled: {
      const TimeGrid& g = spec.grid;
      const double slack = 1e-9 * std::max(1.0, std::abs(g.span()));
      if (t < g.start - slack || t > g.end() + slack) {
        throw OutOfDomain("sampled potential queried at t = " +
                          std::to_string(t) + " outside [" +
                          std::to_string(g.start) + ", " +
                          std::to_string(g.end()) + "]");
      }
      const double pos = (t - g.start) / g.step;
      Eigen::Index i = static_cast<Eigen::Index>(std::floor(pos));
      i = std::clamp<Eigen::Index>(i, 0, g.count - 2);
      double w = pos - static_cast<double>(i);
      w = std::clamp(w, 0.0, 1.0);
      return (1.0 - w) * spec.samples[i] + w * spec.samples[i + 1];
    }
  }
  throw Error("unreachable potential kind");
}

Matrix2 evaluate_potential(const PotentialSpec& spec, double t) {
  const Matrix2 v = pauli_compose(evaluate_components(spec, t));
  if (spec.hermitian && !is_hermitian(v)) {
    throw NonHermitian("potential flagged hermitian evaluates non-Hermitian at t = " +
                       std::to_string(t));
  }
  return v;
}

}  // namespace dirax
