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

#include "dirax/types.hpp"

namespace dirax {

/// Pauli matrix sigma_k for k in 0..3, with sigma_0 the identity,
/// sigma_1 = [[0,1],[1,0]], sigma_2 = [[0,-i],[i,0]], sigma_3 = [[1,0],[0,-1]].
const Matrix2& sigma(int k);

/// f0*sigma_0 + f1*sigma_1 + f2*sigma_2 + f3*sigma_3.
Matrix2 pauli_compose(const FourVector& f);

/// Inverse of pauli_compose: f_mu = tr(sigma_mu M) / 2.
FourVector pauli_decompose(const Matrix2& m);

/// AB - BA.
Matrix2 commutator(const Matrix2& a, const Matrix2& b);

/// Closed-form exp(M) for 2x2 complex M. Splits M = c*sigma_0 + a.sigma and
/// uses exp(M) = e^c (cosh(r) + sinh(r)/r * a.sigma) with r = sqrt(a.a) on
/// the principal branch; for |r| <= 1e-8 the removable singularity is
/// handled by the series sinh(r)/r -> 1 + r^2/6.
Matrix2 expm2(const Matrix2& m);

/// True when every component's imaginary part is at most tol in magnitude.
bool components_real(const FourVector& f, double tol = 1e-12);

}  // namespace dirax
