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

#include "dirax/pauli.hpp"

#include <cmath>
#include <stdexcept>

#include "dirax/errors.hpp"

namespace dirax {

const Matrix2& sigma(int k) {
  static const Matrix2 s0 = Matrix2::Identity();
  static const Matrix2 s1 = (Matrix2() << 0, 1, 1, 0).finished();
  static const Matrix2 s2 =
      (Matrix2() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const Matrix2 s3 = (Matrix2() << 1, 0, 0, -1).finished();
  switch (k) {
    case 0:
      return s0;
    case 1:
      return s1;
    case 2:
      return s2;
    case 3:
      return s3;
    default:
      throw std::out_of_range("sigma index must be 0..3");
  }
}

Matrix2 pauli_compose(const FourVector& f) {
  Matrix2 m;
  m << f[0] + f[3], f[1] - iu * f[2],  //
      f[1] + iu * f[2], f[0] - f[3];
  return m;
}

FourVector pauli_decompose(const Matrix2& m) {
  FourVector f;
  f[0] = 0.5 * (m(0, 0) + m(1, 1));
  f[1] = 0.5 * (m(0, 1) + m(1, 0));
  f[2] = 0.5 * iu * (m(0, 1) - m(1, 0));
  f[3] = 0.5 * (m(0, 0) - m(1, 1));
  return f;
}

Matrix2 commutator(const Matrix2& a, const Matrix2& b) {
  return a * b - b * a;
}

Matrix2 expm2(const Matrix2& m) {
  const FourVector f = pauli_decompose(m);
  const Complex c = f[0];
  const Complex r2 = f[1] * f[1] + f[2] * f[2] + f[3] * f[3];
  const Complex r = std::sqrt(r2);  // principal branch

  Complex ch, shc;  // cosh(r), sinh(r)/r; both even in r
  if (std::abs(r) <= 1e-8) {
    ch = 1.0 + 0.5 * r2;
    shc = 1.0 + r2 / 6.0;
  } else {
    ch = std::cosh(r);
    shc = std::sinh(r) / r;
  }

  const Matrix2 traceless = m - c * Matrix2::Identity();  // a.sigma
  return std::exp(c) * (ch * Matrix2::Identity() + shc * traceless);
}

bool components_real(const FourVector& f, double tol) {
  for (int k = 0; k < 4; ++k) {
    if (std::abs(f[k].imag()) > tol) return false;
  }
  return true;
}

}  // namespace dirax
