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

#include <stdexcept>
#include <string>

namespace dirax {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid step count is not integral, or step <= 0.
struct BadGrid : Error {
  using Error::Error;
};

// Query outside a sampled potential's grid.
struct OutOfDomain : Error {
  using Error::Error;
};

// Population observable on a zero-norm state.
struct ZeroState : Error {
  using Error::Error;
};

// Seed matrix u(t) fails the determinant guard. Carries the first time
// at which the guard was violated.
struct SingularSeed : Error {
  double t_singular;
  SingularSeed(double t, const std::string& msg) : Error(msg), t_singular(t) {}
};

struct DegenerateEigenvalues : Error {
  using Error::Error;
};

// Trajectories on different grids fed to a nodewise operation.
struct GridMismatch : Error {
  using Error::Error;
};

// Potential not flagged hermitian where a unitary evolution is required,
// or a hermitian-flagged spec evaluating to a non-Hermitian matrix.
struct NonHermitian : Error {
  using Error::Error;
};

struct NotUnitary : Error {
  using Error::Error;
};

struct BadBounds : Error {
  using Error::Error;
};

struct BadConfig : Error {
  using Error::Error;
};

struct TooShort : Error {
  using Error::Error;
};

}  // namespace dirax
