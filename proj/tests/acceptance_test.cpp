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

// Acceptance suite: one pass/fail line per numbered criterion, each checked
// at its stated tolerance and runtime budget. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "dirax/cavity.hpp"
#include "dirax/cli.hpp"
#include "dirax/darboux.hpp"
#include "dirax/errors.hpp"
#include "dirax/pauli.hpp"
#include "dirax/transistor.hpp"
#include "test_helpers.hpp"

using namespace dirax;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

PotentialSpec sine_drive() {
  std::array<SinusoidComponent, 4> comps{};
  comps[1] = SinusoidComponent{0.3, 1.0, 0.0, 0.0};
  return sinusoidal_potential(comps);
}

ResidualReport drive_residual(double lambda, double h) {
  const PotentialSpec drive = sine_drive();
  const DarbouxSeed seed = seed_for_sigma(2, drive, lambda, 0.0, 5.0, h);
  const Trajectory probe =
      integrate_stationary(drive, 2.0, Spinor{1.0, 0.0}, 0.0, 5.0, h);
  return verify_intertwining(seed, probe);
}

// 1. Intertwining relation on the stated configuration: f1 = 0.3 sin t,
//    sigma_2 seed at lambda = 1 on [0, 5], probe at eps = 2, h = 1e-3;
//    residual <= 1e-5 and refinement factor >= 3.5.
Outcome criterion1() {
  try {
    const ResidualReport at_h = drive_residual(1.0, 1e-3);
    const ResidualReport at_h2 = drive_residual(1.0, 5e-4);
    const double ratio = at_h.max_rel / at_h2.max_rel;
    const bool ok = !at_h.zero_output && at_h.max_rel <= 1e-5 && ratio >= 3.5;
    return {ok, "residual max = " + num(at_h.max_rel) +
                    ", refinement factor = " + num(ratio)};
  } catch (const SingularSeed& e) {
    // Measured and provable: for any potential with real f0/f1/f2
    // components, sigma_1-conjugation forces both sigma_2-eigenvector seed
    // columns onto sigma_1 psi* = -+ i psi, confining det u(t) to the
    // imaginary axis; at lambda = 1 it crosses zero near the free-system
    // time pi/4, so the transformation does not exist on [0, 5].
    std::string detail =
        "stated configuration is singular: det u crosses zero at t* = " +
        num(e.t_singular) +
        " (imaginary-axis confinement of the sigma_2 seed determinant under "
        "a pure f1 drive); the transformation does not exist on [0, 5].";
    try {
      const ResidualReport v1 = drive_residual(0.1, 1e-3);
      const ResidualReport v2 = drive_residual(0.1, 5e-4);
      detail += " Nearest valid configuration (lambda = 0.1, all else "
                "equal): residual max = " +
                num(v1.max_rel) +
                ", refinement factor = " + num(v1.max_rel / v2.max_rel) +
                " (meets the stated tolerances).";
    } catch (const Error&) {
    }
    return {false, detail};
  }
}

// 2. Annihilation of both seed columns to 1e-10 relative, and eigenvalue
//    transport at order >= 2 in h (residual drops by >= 3.5 when h halves).
Outcome criterion2() {
  const PotentialSpec drive = sine_drive();
  const double h = 1e-3;
  const DarbouxSeed seed = seed_for_sigma(2, drive, 0.1, 0.0, 5.0, h);

  double worst = 0.0;
  for (const Trajectory* column : {&seed.traj1, &seed.traj2}) {
    const Trajectory annihilated = intertwine(seed, *column);
    for (std::size_t k = 0; k < annihilated.states.size(); ++k) {
      const double scale = column->states[k].norm();
      worst = std::max(worst, annihilated.states[k].norm() / scale);
    }
  }

  const ResidualReport at_h = drive_residual(0.1, h);
  const ResidualReport at_h2 = drive_residual(0.1, h / 2.0);
  const double ratio = at_h.max_rel / at_h2.max_rel;

  const bool ok = worst <= 1e-10 && !at_h.zero_output && ratio >= 3.5;
  return {ok, "annihilation residual = " + num(worst) +
                  ", transport refinement factor = " + num(ratio)};
}

// 3. Commuting fixed point: sigma_3 seed on a sigma_3-diagonal potential
//    gives dV <= 1e-12 and controlled_run == rabi_baseline to 1e-10.
Outcome criterion3() {
  RabiConfig cfg;
  cfg.g = 0.0;
  cfg.delta = 1.0;
  cfg.t_final = 10.0;
  cfg.h = 1e-2;

  const DarbouxSeed seed =
      seed_for_sigma(3, baseline_spec(cfg), 1.0, 0.0, cfg.t_final, cfg.h);
  const DarbouxResult res = delta_V(seed);
  double max_dv = 0.0;
  for (const FourVector& dv : res.delta_v_series) {
    max_dv = std::max(max_dv, dv.cwiseAbs().maxCoeff());
  }

  const InversionSeries base = rabi_baseline(cfg);
  const InversionSeries run = controlled_run(cfg, 3, 1.0);
  double max_diff = 0.0;
  for (std::size_t k = 0; k < base.w.size(); ++k) {
    max_diff = std::max(max_diff, std::abs(base.w[k] - run.w[k]));
  }

  const bool ok = max_dv <= 1e-12 && max_diff <= 1e-10;
  return {ok, "max |dV| = " + num(max_dv) +
                  ", max nodewise |W - W_baseline| = " + num(max_diff)};
}

// 4. Rabi baseline exactness at delta = 0, g = 1, h = 1e-3, t_final = 100,
//    plus a sane (non-collapsing) metric.
Outcome criterion4() {
  RabiConfig cfg;
  cfg.g = 1.0;
  cfg.delta = 0.0;
  cfg.t_final = 100.0;
  cfg.h = 1e-3;
  const InversionSeries series = rabi_baseline(cfg);
  double max_err = 0.0;
  for (Eigen::Index k = 0; k < series.grid.count; ++k) {
    const double s = std::sin(series.grid.node(k));
    max_err = std::max(max_err, std::abs(series.p_down[k] - s * s));
  }
  const double metric = collapse_metric(series.w);
  const bool ok = max_err <= 1e-6 && metric >= 0.95 && metric <= 1.05;
  return {ok, "max |P_down - sin^2| = " + num(max_err) +
                  ", collapse metric = " + num(metric)};
}

// 5. Collapse of the Rabi oscillations under D(sigma_1) at the documented
//    defaults (g = 1, delta = 8, lambda = 0.5, t = 100, h = 1e-2): metric
//    at least 10x below the baseline, non-constant V1, and a valid run in
//    the fallback sweep {0.5, 1, 2}. Frozen first-run regression values.
Outcome criterion5() {
  RabiConfig cfg;
  cfg.g = 1.0;
  cfg.delta = 8.0;
  cfg.t_final = 100.0;
  cfg.h = 1e-2;
  const double lambda = 0.5;

  std::vector<double> valid_sweep;
  for (double l : {0.5, 1.0, 2.0}) {
    try {
      controlled_run(cfg, 1, l);
      valid_sweep.push_back(l);
    } catch (const SingularSeed&) {
    }
  }

  const InversionSeries base = rabi_baseline(cfg);
  const InversionSeries run = controlled_run(cfg, 1, lambda);
  const double mb = collapse_metric(base.w);
  const double mc = collapse_metric(run.w);

  double f1_lo = 1e300, f1_hi = -1e300;
  for (const FourVector& f : run.v1_components) {
    f1_lo = std::min(f1_lo, f[1].real());
    f1_hi = std::max(f1_hi, f[1].real());
  }
  const bool non_constant = (f1_hi - f1_lo) > 1e-6;

  // regression baseline frozen at first implementation (not literature)
  const bool regression = std::abs(mc - 0.064021169478) <= 3e-3 &&
                          std::abs(run.w[5000] - 0.971066319269) <= 1e-3;

  const bool ok = mc <= 0.1 * mb && non_constant && !valid_sweep.empty() &&
                  regression;
  return {ok, "metric baseline = " + num(mb) + ", controlled = " + num(mc) +
                  " (ratio " + num(mc / mb) + "), f1 range " + num(f1_lo) +
                  ".." + num(f1_hi) + ", valid sweep points = " +
                  std::to_string(valid_sweep.size())};
}

// 6. Gate identities: zero potential -> IDENTITY exactly; constant sigma_k
//    with aT = pi/2 -> Pauli gate k at F >= 1 - 1e-8; Hadamard generator at
//    F >= 1 - 1e-6; unitarity defect <= 1e-8 throughout.
Outcome criterion6() {
  std::ostringstream detail;
  bool ok = true;

  const GateReport idle =
      evolve_gate(constant_potential(FourVector::Zero()), 1.0, 1e-3);
  const GateReport idle_cls = classify_gate(idle.propagator);
  ok &= idle_cls.best_match == "I" && idle_cls.fidelity == 1.0 &&
        idle.unitarity_defect <= 1e-8;
  detail << "zero->I F=" << idle_cls.fidelity;

  const std::array<std::string, 4> names = {"", "X", "Y", "Z"};
  for (int axis = 1; axis <= 3; ++axis) {
    FieldConfig fc;
    fc.direction = Direction4::Zero();
    fc.direction[axis] = 1.0;
    fc.amplitude = 1.0;
    fc.duration = kPi / 2.0;
    const double h = fc.duration / 2000.0;
    const GateReport evolved =
        evolve_gate(build_field_potential(fc), fc.duration, h);
    const GateReport cls = classify_gate(evolved.propagator);
    ok &= cls.best_match == names[axis] && cls.fidelity >= 1.0 - 1e-8 &&
          evolved.unitarity_defect <= 1e-8;
    detail << ", " << names[axis] << " F=" << num(cls.fidelity);
  }

  FieldConfig hc;
  const double r = 1.0 / std::sqrt(2.0);
  hc.direction = Direction4{0.0, r, 0.0, r};
  hc.amplitude = 1.0;
  hc.duration = kPi / 2.0;
  const GateReport hev =
      evolve_gate(build_field_potential(hc), hc.duration, hc.duration / 2000.0);
  const GateReport hcls = classify_gate(hev.propagator);
  ok &= hcls.best_match == "H" && hcls.fidelity >= 1.0 - 1e-6 &&
        hev.unitarity_defect <= 1e-8;
  detail << ", H F=" << num(hcls.fidelity);

  return {ok, detail.str()};
}

// 7. Synthesis of X over direction (0,1,0,0): found point on the
//    a*T = pi/2 manifold within 1e-3 and F >= 1 - 1e-6.
Outcome criterion7() {
  const SynthesisResult res =
      synthesize("X", Direction4{0, 1, 0, 0}, {0.5, 2.0}, {0.5, 4.0}, 400);
  const double product = res.amplitude * res.duration;
  const bool ok = std::abs(product - kPi / 2.0) <= 1e-3 &&
                  res.report.fidelity >= 1.0 - 1e-6 &&
                  res.report.best_match == "X";
  return {ok, "a* = " + num(res.amplitude) + ", T* = " + num(res.duration) +
                  ", a*T* - pi/2 = " + num(product - kPi / 2.0) +
                  ", F = " + num(res.report.fidelity)};
}

// 8. Numerical infrastructure: expm2 vs series oracle, RK4 order slope,
//    Liouville identity, Pauli round trip.
Outcome criterion8() {
  std::ostringstream detail;
  bool ok = true;

  testing::Rng rng(20260808);
  double worst_exp = 0.0, worst_round = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Matrix2 m = rng.matrix();
    worst_exp = std::max(worst_exp, max_abs(expm2(m) - testing::taylor_expm(m)));
    worst_round =
        std::max(worst_round, max_abs(pauli_compose(pauli_decompose(m)) - m));
  }
  ok &= worst_exp <= 1e-10 && worst_round <= 1e-14;
  detail << "expm2 vs oracle = " << num(worst_exp)
         << ", round trip = " << num(worst_round);

  const PotentialSpec free_spec = constant_potential(FourVector::Zero());
  auto final_error = [&](double h) {
    const Trajectory traj =
        integrate_stationary(free_spec, 1.0, Spinor{1.0, 0.0}, 0.0, 2.0, h);
    return (traj.states.back() - Spinor{std::exp(Complex(0, -2.0)), 0.0})
        .norm();
  };
  const double slope1 = std::log2(final_error(1e-2) / final_error(5e-3));
  const double slope2 = std::log2(final_error(5e-3) / final_error(2.5e-3));
  ok &= slope1 >= 3.7 && slope1 <= 4.3 && slope2 >= 3.7 && slope2 <= 4.3;
  detail << ", RK4 slopes = " << num(slope1) << "/" << num(slope2);

  std::array<SinusoidComponent, 4> comps{};
  comps[3] = SinusoidComponent{0.8, 1.3, 0.4, 0.1};
  comps[1] = SinusoidComponent{0.5, 0.9, 0.0, 0.0};
  const PotentialSpec spec = sinusoidal_potential(comps);
  const double h = 1e-3, t_final = 2.0;
  const Matrix2 phi = fundamental_matrix(spec, 0.2, 0.0, t_final, h);
  const TimeGrid grid = make_grid(0.0, t_final, h);
  std::vector<Complex> trace(grid.count);
  for (Eigen::Index k = 0; k < grid.count; ++k) {
    trace[k] = 2.0 * iu * evaluate_components(spec, grid.node(k))[3];
  }
  const Complex expected = std::exp(testing::simpson(trace, h));
  const double liouville =
      std::abs(phi.determinant() - expected) / std::abs(expected);
  ok &= liouville <= 1e-8;
  detail << ", Liouville = " << num(liouville);

  return {ok, detail.str()};
}

// 9. Failure modes: the free sigma_1 seed goes singular at pi/4, and the
//    CLI produces the documented exit codes 2/3/4.
Outcome criterion9() {
  std::ostringstream detail;
  bool ok = true;

  double t_star = -1.0;
  try {
    seed_for_sigma(1, constant_potential(FourVector::Zero()), 1.0, 0.0, 1.0,
                   1e-3);
    ok = false;
  } catch (const SingularSeed& e) {
    t_star = e.t_singular;
    ok &= std::abs(t_star - kPi / 4.0) <= 1e-3;
  }
  detail << "t* - pi/4 = " << num(t_star - kPi / 4.0);

  const char* cli = std::getenv("DIRAX_CLI");
  if (cli == nullptr) {
    return {false, detail.str() + "; DIRAX_CLI not set, cannot probe exits"};
  }
  const fs::path tmp =
      fs::temp_directory_path() / ("dirax_accept_" + std::to_string(getpid()));
  fs::create_directories(tmp);
  auto shell = [&](const std::string& args) {
    const std::string cmd = std::string(cli) + " " + args + " >" +
                            (tmp / "log").string() + " 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };

  std::ofstream(tmp / "bad.json") << R"({"gg": 1})";
  const int exit2 = shell("rabi --config " + (tmp / "bad.json").string());

  std::ofstream(tmp / "singular.json")
      << R"({"g": 0, "delta": 0, "sigma": 1, "lambda": 1, "t_final": 1,
             "h": 0.001, "output": ")"
      << (tmp / "c.csv").string() << R"("})";
  const int exit3 =
      shell("controlled --config " + (tmp / "singular.json").string());

  std::ofstream(tmp / "verify.json")
      << R"({"residual_tol": 1e-12, "output": ")" << (tmp / "v.csv").string()
      << R"("})";
  const int exit4 = shell("verify --config " + (tmp / "verify.json").string());

  std::error_code ec;
  fs::remove_all(tmp, ec);

  ok &= exit2 == 2 && exit3 == 3 && exit4 == 4;
  detail << "; CLI exits = " << exit2 << "/" << exit3 << "/" << exit4
         << " (want 2/3/4)";
  return {ok, detail.str()};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "intertwining relation residual", 5.0, criterion1},
      {2, "seed annihilation and eigenvalue transport", 5.0, criterion2},
      {3, "commuting fixed point", 2.0, criterion3},
      {4, "Rabi baseline exactness", 2.0, criterion4},
      {5, "collapse of Rabi oscillations under D(sigma_1)", 10.0, criterion5},
      {6, "gate identities", 2.0, criterion6},
      {7, "gate synthesis on the a*T = pi/2 manifold", 10.0, criterion7},
      {8, "numerical infrastructure", 5.0, criterion8},
      {9, "failure modes and CLI exit codes", 5.0, criterion9},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("unexpected exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > criterion.budget_seconds) {
      outcome.pass = false;
      outcome.detail += " [over runtime budget]";
    }
    std::printf("[%s] criterion %d: %s (%.2fs) -- %s\n",
                outcome.pass ? "PASS" : "FAIL", criterion.id, criterion.name,
                elapsed, outcome.detail.c_str());
    if (!outcome.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
