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

#include "dirax/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirax/errors.hpp"
#include "dirax/pauli.hpp"

namespace dirax {

namespace {

InversionSeries series_from(const Trajectory& traj) {
  InversionSeries out;
  out.grid = traj.grid;
  const PopulationSeries pops = populations(traj);
  out.p_up = pops.p_up;
  out.p_down = pops.p_down;
  out.w.resize(out.p_up.size());
  for (std::size_t k = 0; k < out.w.size(); ++k) {
    out.w[k] = out.p_up[k] - out.p_down[k];
  }
  out.v1_components = traj.potential_samples;
  return out;
}

}  // namespace

void validate(const RabiConfig& cfg) {
  if (cfg.g < 0.0) throw BadConfig("coupling g must satisfy g >= 0");
  if (!(cfg.t_final > 0.0)) throw BadConfig("t_final must be > 0");
  if (!(cfg.h > 0.0)) throw BadConfig("step h must be > 0");
  if (!(cfg.psi0.norm() > 0.0)) throw BadConfig("initial state must be nonzero");
  make_grid(0.0, cfg.t_final, cfg.h);  // throws BadGrid on non-integral count
}

PotentialSpec baseline_spec(const RabiConfig& cfg) {
  FourVector f = FourVector::Zero();
  f[1] = cfg.g;
  f[3] = 0.5 * cfg.delta;
  return constant_potential(f);
}

InversionSeries rabi_baseline(const RabiConfig& cfg) {
  validate(cfg);
  const PotentialSpec spec = baseline_spec(cfg);
  const Trajectory traj = integrate_schrodinger_normalized(
      spec, cfg.epsilon, cfg.psi0, 0.0, cfg.t_final, cfg.h);
  return series_from(traj);
}

InversionSeries controlled_run(const RabiConfig& cfg, int axis, double lambda,
                               double singular_guard) {
  validate(cfg);
  const PotentialSpec spec = baseline_spec(cfg);
  const DarbouxSeed seed = seed_for_sigma(axis, spec, lambda, 0.0,
                                          cfg.t_final, cfg.h, singular_guard);
  const DarbouxResult transformed = delta_V(seed);
  const Trajectory traj = integrate_schrodinger_normalized(
      transformed.v1_spec, cfg.epsilon, cfg.psi0, 0.0, cfg.t_final, cfg.h);
  InversionSeries out = series_from(traj);
  out.seed_eigenvalues = transformed.eigenvalues;
  return out;
}

std::vector<double> atomic_inversion(const Trajectory& traj) {
  const PopulationSeries pops = populations(traj);
  std::vector<double> w(pops.p_up.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = pops.p_up[k] - pops.p_down[k];
  }
  return w;
}

double collapse_metric(const std::vector<double>& w, double window_fraction) {
  if (w.size() < 20) {
    throw TooShort("collapse_metric needs at least 20 nodes, got " +
                   std::to_string(w.size()));
  }
  if (!(window_fraction > 0.0) || window_fraction > 0.5) {
    throw TooShort("window_fraction must lie in (0, 0.5]");
  }
  const std::size_t n = w.size();
  auto window_amplitude = [&](std::size_t begin, std::size_t end) {
    double lo = w[begin], hi = w[begin];
    for (std::size_t k = begin; k < end; ++k) {
      lo = std::min(lo, w[k]);
      hi = std::max(hi, w[k]);
    }
    return hi - lo;
  };
  const std::size_t width = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::ceil(window_fraction * n)));
  const double first = window_amplitude(0, width);
  const double last = window_amplitude(n - width, n);
  if (first < 1e-12) return 0.0;  // flat input convention
  return last / first;
}

PotentialProfile potential_profile(const InversionSeries& series) {
  PotentialProfile prof;
  const std::size_t n = series.v1_components.size();
  prof.t.resize(n);
  for (int mu = 0; mu < 4; ++mu) {
    prof.re[mu].resize(n);
    prof.im[mu].resize(n);
  }
  for (std::size_t k = 0; k < n; ++k) {
    prof.t[k] = series.grid.node(static_cast<Eigen::Index>(k));
    for (int mu = 0; mu < 4; ++mu) {
      prof.re[mu][k] = series.v1_components[k][mu].real();
      prof.im[mu][k] = series.v1_components[k][mu].imag();
    }
  }
  return prof;
}

}  // namespace dirax
