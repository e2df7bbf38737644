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

#include "ebx/gallery.hpp"

#include <cmath>

#include "ebx/error.hpp"

namespace ebx::gallery {
namespace {

CMatrix unit(Index d, Index i, Index j) { return matrix_unit(d, i, j); }

}  // namespace

Channel diag_m2() { return Channel(KrausSet{2, 2, {unit(2, 0, 0), unit(2, 1, 1)}}, "diag_m2"); }

Channel diag_m2_swapped() {
  return Channel(KrausSet{2, 2, {unit(2, 1, 0), unit(2, 0, 1)}}, "diag_m2_swapped");
}

Channel tetrahedral_m3() {
  const double signs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  HolevoEnsemble h{3, 3, {}};
  for (const auto& s : signs) {
    CVector v(3);
    for (Index k = 0; k < 3; ++k) v(k) = s[k] / std::sqrt(3.0);
    const CMatrix p = ket_bra(v, v);
    h.terms.push_back({p, 0.75 * p});
  }
  return Channel(std::move(h), "tetrahedral_m3");
}

Channel depolarizing(Index d) {
  if (d <= 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  HolevoEnsemble h{d, d, {}};
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      h.terms.push_back({unit(d, i, i), unit(d, j, j) / static_cast<double>(d)});
    }
  }
  return Channel(std::move(h), "depolarizing_m" + std::to_string(d));
}

Channel normalized_trace_m2() {
  HolevoEnsemble h{2, 2, {{0.5 * CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)}}};
  return Channel(std::move(h), "normalized_trace_m2");
}

Channel block_state_m3() {
  HolevoEnsemble h{3, 3, {{unit(3, 0, 0), unit(3, 0, 0) + unit(3, 1, 1)}, {unit(3, 2, 2), unit(3, 2, 2)}}};
  return Channel(std::move(h), "block_state_m3");
}

Channel block_state_m3_scaled(const CMatrix& t, double t33) {
  if (t.rows() != 2 || t.cols() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "t must be 2 x 2");
  }
  CMatrix r = CMatrix::Zero(3, 3);
  r.topLeftCorner(2, 2) = t;
  HolevoEnsemble h{3, 3, {{unit(3, 0, 0), r}, {unit(3, 2, 2), t33 * unit(3, 2, 2)}}};
  return Channel(std::move(h), "block_state_m3_scaled");
}

Channel quarter_trace_plus_identity() {
  ChoiMatrix c{2, 2, CMatrix::Zero(4, 4)};
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) {
      c.matrix.block(i * 2, j * 2, 2, 2) =
          (i == j ? CMatrix::Identity(2, 2) : unit(2, i, j)) / 4.0;
    }
  }
  return Channel(std::move(c), "quarter_trace_plus_identity");
}

Channel trace_plus_identity(Index d, double c) {
  if (d <= 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  ChoiMatrix out{d, d, CMatrix::Zero(d * d, d * d)};
  const double norm = static_cast<double>(d) + c;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      CMatrix block = c * unit(d, i, j);
      if (i == j) block += CMatrix::Identity(d, d);
      out.matrix.block(i * d, j * d, d, d) = block / norm;
    }
  }
  return Channel(std::move(out), "trace_plus_identity");
}

Channel scaled_trace(Index d, double c) {
  if (d <= 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  const double norm = static_cast<double>(d) + c;
  HolevoEnsemble h{d, d, {{CMatrix::Identity(d, d), CMatrix::Identity(d, d) / norm}}};
  return Channel(std::move(h), "scaled_trace");
}

Channel sign_flip_m2() {
  CMatrix v = CMatrix::Identity(2, 2);
  v(1, 1) = -1.0;
  return Channel(KrausSet{2, 2, {v}}, "sign_flip_m2");
}

CStarCombination diag_m2_ucp_split() {
  const CMatrix t = CMatrix::Identity(2, 2) / std::sqrt(2.0);
  Channel id(KrausSet{2, 2, {CMatrix::Identity(2, 2)}}, "identity_m2");
  return CStarCombination{2, 2, {{t, std::move(id)}, {t, sign_flip_m2()}}};
}

}  // namespace ebx::gallery
