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

#include "dirax/types.hpp"

#include <cmath>
#include <string>

#include "dirax/errors.hpp"

namespace dirax {

TimeGrid make_grid(double t0, double t1, double h) {
  if (!(h > 0.0)) throw BadGrid("grid step must satisfy h > 0");
  const double ratio = (t1 - t0) / h;
  const double n = std::round(ratio);
  if (n < 1.0 || std::abs(ratio - n) > 1e-9) {
    throw BadGrid("(t1 - t0)/h = " + std::to_string(ratio) +
                  " is not within 1e-9 of an integer >= 1");
  }
  return TimeGrid{t0, h, static_cast<Eigen::Index>(n) + 1};
}

}  // namespace dirax
