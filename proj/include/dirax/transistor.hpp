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

#include <string>
#include <utility>
#include <vector>

#include "dirax/potential.hpp"
#include "dirax/types.hpp"

namespace dirax {

// Quantum-transistor layer: a Lorentz-force-form perturbation potential is
// set by the direction of the external field on a charge qubit; the gate it
// generates is recovered by propagating i dU/dt = H(t) U and classifying U
// against a named-gate library up to global phase. Field along spatial axis
// j contributes to f_j; the scalar part contributes to f_0, which only
// produces a global phase and never changes the classification.

enum class Envelope { constant, sine_ramp };

struct FieldConfig {
  Direction4 direction{Direction4::Zero()};  // (d0; d1, d2, d3)
  double amplitude = 0.0;
  Envelope envelope = Envelope::constant;
  double duration = 1.0;
  double step = 1e-3;
};

struct GateDef {
  std::string name;
  Matrix2 matrix;
};

/// The named-gate library, in tie-breaking order:
/// I, X, Y, Z, H, S, T, SQRT_X.
const std::vector<GateDef>& gate_library();

struct GateReport {
  Matrix2 propagator = Matrix2::Identity();
  std::string best_match;
  double fidelity = 0.0;          // |tr(G^dag U)| / 2 for the winner
  double global_phase = 0.0;      // arg tr(G^dag U), in (-pi, pi]
  double unitarity_defect = 0.0;  // ||U^dag U - 1||_max
  bool tie = false;               // another gate matched within 1e-12
};

/// f_mu(t) = amplitude * env(t) * d_mu with env = 1 or sin^2(pi t / T);
/// the result is flagged hermitian. Throws BadConfig for negative
/// amplitude, non-positive duration/step, or a spatial direction that is
/// neither zero nor unit length.
PotentialSpec build_field_potential(const FieldConfig& cfg);

/// RK4 propagation of i dU/dt = H(t) U over [0, duration]; fills only the
/// propagator and unitarity_defect fields. Requires a hermitian-flagged
/// spec (NonHermitian otherwise) and an integral step count (BadGrid).
GateReport evolve_gate(const PotentialSpec& spec, double duration, double h);

/// Library classification by phase-invariant fidelity |tr(G^dag U)|/2.
/// Requires unitarity defect <= 1e-6 (NotUnitary otherwise). Ties are
/// broken by library order and flagged.
GateReport classify_gate(const Matrix2& u);

struct SynthesisResult {
  double amplitude = 0.0;
  double duration = 0.0;
  GateReport report;
  bool incomplete = false;  // best fidelity below the acceptance threshold
};

/// Deterministic derivative-free search for (amplitude, duration)
/// maximizing the fidelity to a named target gate under a constant-envelope
/// field along `direction`: a ceil(sqrt(budget))^2 coarse grid followed by
/// two sweeps of coordinate-wise golden-section refinement (20 iterations
/// per axis). Among near-optimal grid points the smallest amplitude*duration
/// is preferred, so shorter/weaker pulses win when the optimum is a
/// manifold. Requires ordered positive bounds and budget >= 25 (BadBounds).
SynthesisResult synthesize(const std::string& target,
                           const Direction4& direction,
                           std::pair<double, double> amplitude_bounds,
                           std::pair<double, double> duration_bounds,
                           int budget, double h = 1e-3,
                           double fidelity_threshold = 0.999);

struct ResumeRow {
  FieldConfig config;
  GateReport report;
  std::string error;  // non-empty when this row failed; other rows unaffected
};

/// One classified row per config, in input order.
std::vector<ResumeRow> resume_table(const std::vector<FieldConfig>& configs);

}  // namespace dirax
