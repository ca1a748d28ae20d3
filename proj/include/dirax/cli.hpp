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
#include <vector>

#include "dirax/cavity.hpp"
#include "dirax/errors.hpp"
#include "dirax/transistor.hpp"

namespace dirax::cli {

// Config documents are JSON with // and /* */ comments allowed, one flat
// object per run. Keys are command-specific; unknown keys are rejected.
// Artifacts: a CSV (schema fixed per command, floats with 17 significant
// digits) plus a machine-readable JSON summary alongside it. Output files
// are written atomically (write-temp-then-rename) and byte-identical across
// repeated runs of the same config on the same build.

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitVerification = 4;

struct RunConfig {
  std::string command;
  std::string output;  // CSV path; the summary lands next to it

  // rabi / controlled / verify
  RabiConfig rabi;
  int sigma = 1;
  double lambda = 0.5;

  // verify
  double epsilon_test = 2.0;
  double residual_tol = 1e-5;

  // gate / synthesize / resume
  FieldConfig field;
  std::string target;
  double a_min = 0.5, a_max = 2.0;
  double t_min = 0.5, t_max = 4.0;
  int budget = 400;
  std::vector<FieldConfig> resume_configs;

  // tolerance overrides
  double sing_guard = kDefaultSingularGuard;
  double fidelity_threshold = 0.999;
};

/// Parses and fully validates a config document. Throws ParseError for
/// malformed JSON and ValidationError naming the offending key and
/// constraint otherwise.
RunConfig parse_config(const std::string& text);

/// Canonical JSON echo of a config, defaults materialized;
/// parse_config(render_config(c)) reproduces c.
std::string render_config(const RunConfig& config);

struct RunOutcome {
  int exit_code = kExitOk;
  std::string message;  // non-empty on failure, cites the failing quantity
};

/// Dispatches to the experiment pipelines and writes the artifacts.
RunOutcome run(const RunConfig& config);

}  // namespace dirax::cli
