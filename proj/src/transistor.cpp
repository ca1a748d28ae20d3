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

#include "dirax/transistor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "dirax/dirac.hpp"
#include "dirax/errors.hpp"
#include "dirax/pauli.hpp"

namespace dirax {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix2 make2(Complex a11, Complex a12, Complex a21, Complex a22) {
  Matrix2 m;
  m << a11, a12, a21, a22;
  return m;
}

double unitarity_defect_of(const Matrix2& u) {
  return max_abs(u.adjoint() * u - Matrix2::Identity());
}

// Deterministic golden-section maximization on [lo, hi].
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  int iters) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - ratio * (b - a);
  double x2 = a + ratio * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + ratio * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - ratio * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? x1 : x2;
}

}  // namespace

const std::vector<GateDef>& gate_library() {
  static const std::vector<GateDef> lib = [] {
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<GateDef> gates;
    gates.push_back({"I", Matrix2::Identity()});
    gates.push_back({"X", make2(0, 1, 1, 0)});
    gates.push_back({"Y", make2(0, Complex(0, -1), Complex(0, 1), 0)});
    gates.push_back({"Z", make2(1, 0, 0, -1)});
    gates.push_back({"H", make2(r, r, r, -r)});
    gates.push_back({"S", make2(1, 0, 0, Complex(0, 1))});
    gates.push_back({"T", make2(1, 0, 0, std::polar(1.0, kPi / 4.0))});
    gates.push_back({"SQRT_X", make2(Complex(0.5, 0.5), Complex(0.5, -0.5),
                                     Complex(0.5, -0.5), Complex(0.5, 0.5))});
    return gates;
  }();
  return lib;
}

PotentialSpec build_field_potential(const FieldConfig& cfg) {
  if (cfg.amplitude < 0.0) throw BadConfig("field amplitude must be >= 0");
  if (!(cfg.duration > 0.0)) throw BadConfig("field duration must be > 0");
  if (!(cfg.step > 0.0)) throw BadConfig("field step must be > 0");
  const double spatial =
      cfg.direction.tail<3>().norm();
  if (cfg.amplitude > 0.0) {
    const bool unit = std::abs(spatial - 1.0) <= 1e-9;
    const bool scalar_only = spatial == 0.0 && cfg.direction[0] != 0.0;
    if (!unit && !scalar_only) {
      throw BadConfig(
          "field direction needs a unit spatial part (or a pure scalar part)");
    }
  }

  if (cfg.envelope == Envelope::constant) {
    FourVector f;
    for (int mu = 0; mu < 4; ++mu) f[mu] = cfg.amplitude * cfg.direction[mu];
    return constant_potential(f);
  }

  // sin^2(pi t / T) = 0.5 + 0.5 sin(2 pi t / T - pi/2)
  std::array<SinusoidComponent, 4> comps;
  const double omega = 2.0 * kPi / cfg.duration;
  for (int mu = 0; mu < 4; ++mu) {
    const double half = 0.5 * cfg.amplitude * cfg.direction[mu];
    comps[mu] = SinusoidComponent{half, omega, -0.5 * kPi, half};
  }
  return sinusoidal_potential(comps);
}

GateReport evolve_gate(const PotentialSpec& spec, double duration, double h) {
  if (!spec.hermitian) {
    throw NonHermitian("evolve_gate requires a hermitian-flagged potential");
  }
  GateReport report;
  report.propagator = schrodinger_propagator(spec, 0.0, duration, h);
  report.unitarity_defect = unitarity_defect_of(report.propagator);
  return report;
}

GateReport classify_gate(const Matrix2& u) {
  GateReport report;
  report.propagator = u;
  report.unitarity_defect = unitarity_defect_of(u);
  if (report.unitarity_defect > 1e-6) {
    throw NotUnitary("matrix is not unitary (defect " +
                     std::to_string(report.unitarity_defect) + ")");
  }

  Complex best_overlap{0.0, 0.0};
  for (const GateDef& gate : gate_library()) {
    const Complex overlap = 0.5 * (gate.matrix.adjoint() * u).trace();
    const double fid = std::abs(overlap);
    if (fid > report.fidelity + 1e-12) {
      report.fidelity = fid;
      report.best_match = gate.name;
      best_overlap = overlap;
      report.tie = false;
    } else if (fid >= report.fidelity - 1e-12 && !report.best_match.empty() &&
               gate.name != report.best_match) {
      report.tie = true;
    }
  }
  report.global_phase = std::arg(best_overlap);
  if (report.global_phase <= -kPi) report.global_phase += 2.0 * kPi;
  return report;
}

SynthesisResult synthesize(const std::string& target,
                           const Direction4& direction,
                           std::pair<double, double> amplitude_bounds,
                           std::pair<double, double> duration_bounds,
                           int budget, double h, double fidelity_threshold) {
  const double a_lo = amplitude_bounds.first, a_hi = amplitude_bounds.second;
  const double t_lo = duration_bounds.first, t_hi = duration_bounds.second;
  if (!(a_lo > 0.0) || !(a_lo < a_hi) || !(t_lo > 0.0) || !(t_lo < t_hi)) {
    throw BadBounds("synthesize bounds must be positive and ordered");
  }
  if (budget < 25) throw BadBounds("synthesize budget must be >= 25");

  const GateDef* target_gate = nullptr;
  for (const GateDef& gate : gate_library()) {
    if (gate.name == target) target_gate = &gate;
  }
  if (target_gate == nullptr) throw BadConfig("unknown target gate " + target);

  const auto propagator_at = [&](double a, double t) -> Matrix2 {
    FieldConfig cfg;
    cfg.direction = direction;
    cfg.amplitude = a;
    cfg.envelope = Envelope::constant;
    cfg.duration = t;
    const PotentialSpec spec = build_field_potential(cfg);
    const auto steps = std::max<long>(1, std::lround(t / h));
    return schrodinger_propagator(spec, 0.0, t, t / static_cast<double>(steps));
  };
  const auto fidelity_at = [&](double a, double t) -> double {
    return std::abs(0.5 *
                    (target_gate->matrix.adjoint() * propagator_at(a, t)).trace());
  };

  // Coarse grid scan.
  const int m = static_cast<int>(std::ceil(std::sqrt(double(budget))));
  const auto a_node = [&](int i) {
    return a_lo + (a_hi - a_lo) * double(i) / double(m - 1);
  };
  const auto t_node = [&](int j) {
    return t_lo + (t_hi - t_lo) * double(j) / double(m - 1);
  };
  Eigen::MatrixXd grid_fid(m, m);
  double f_max = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      grid_fid(i, j) = fidelity_at(a_node(i), t_node(j));
      f_max = std::max(f_max, grid_fid(i, j));
    }
  }
  // Among near-optimal grid points prefer the smallest amplitude*duration;
  // when the optimum is a manifold a*T = const this picks its lowest branch.
  int best_i = 0, best_j = 0;
  double best_product = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (grid_fid(i, j) >= f_max - 1e-3) {
        const double product = a_node(i) * t_node(j);
        if (product < best_product) {
          best_product = product;
          best_i = i;
          best_j = j;
        }
      }
    }
  }

  double a_best = a_node(best_i);
  double t_best = t_node(best_j);
  const double a_cell = (a_hi - a_lo) / double(m - 1);
  const double t_cell = (t_hi - t_lo) / double(m - 1);
  for (int sweep = 0; sweep < 2; ++sweep) {
    a_best = golden_max(
        [&](double a) { return fidelity_at(a, t_best); },
        std::max(a_lo, a_best - a_cell), std::min(a_hi, a_best + a_cell), 20);
    t_best = golden_max(
        [&](double t) { return fidelity_at(a_best, t); },
        std::max(t_lo, t_best - t_cell), std::min(t_hi, t_best + t_cell), 20);
  }

  SynthesisResult result;
  result.amplitude = a_best;
  result.duration = t_best;
  result.report = classify_gate(propagator_at(a_best, t_best));
  const double target_fid = fidelity_at(a_best, t_best);
  result.incomplete = target_fid < fidelity_threshold;
  return result;
}

std::vector<ResumeRow> resume_table(const std::vector<FieldConfig>& configs) {
  std::vector<ResumeRow> rows;
  rows.reserve(configs.size());
  for (const FieldConfig& cfg : configs) {
    ResumeRow row;
    row.config = cfg;
    try {
      const PotentialSpec spec = build_field_potential(cfg);
      const GateReport evolved = evolve_gate(spec, cfg.duration, cfg.step);
      row.report = classify_gate(evolved.propagator);
      row.report.unitarity_defect = evolved.unitarity_defect;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dirax
