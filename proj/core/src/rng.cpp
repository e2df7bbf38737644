// Copyright 2026 The ebx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ebx/rng.hpp"

#include <cmath>

namespace ebx {

CMatrix SeededRng::complex_gaussian(Index rows, Index cols) {
  CMatrix m(rows, cols);
  const double scale = 1.0 / std::sqrt(2.0);
  // Column-major fill order is part of the determinism contract.
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal();
      const double im = normal();
      m(i, j) = Complex(re, im) * scale;
    }
  }
  return m;
}

CVector SeededRng::unit_vector(Index d) {
  for (;;) {
    CVector v = complex_gaussian(d, 1).col(0);
    const double n = v.norm();
    if (n > 1e-12) return v / n;
  }
}

CMatrix SeededRng::unitary(Index d) {
  const CMatrix g = complex_gaussian(d, d);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

}  // namespace ebx
