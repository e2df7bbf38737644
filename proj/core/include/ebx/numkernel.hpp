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

// Tolerance-aware dense complex linear algebra. Everything above this layer
// talks about ranks, positivity and square roots through these functions so
// that a single Tolerance controls every numerical cutoff.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace ebx {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

struct Tolerance {
  double rank_rel = 1e-9;   // singular values <= rank_rel * sigma_max count as zero
  double psd_floor = 1e-9;  // admissible negative eigenvalue, relative to max |lambda|
  double eq_abs = 1e-9;     // entrywise equality bound

  // Throws InvalidArgument unless every field lies in (0, 1e-3].
  void validate() const;

  static Tolerance uniform(double value) { return {value, value, value}; }
};

struct HermEig {
  RVector values;   // descending
  CMatrix vectors;  // orthonormal columns, first non-negligible entry real > 0
};

// Largest entry modulus; 0 for an empty matrix.
double max_abs(const CMatrix& m);

bool is_hermitian(const CMatrix& m, const Tolerance& tol);

// Throws NotHermitian when m is not square or ||m - m*||_max > eq_abs.
// The returned matrix is the symmetrized (m + m*) / 2.
CMatrix checked_hermitian(const CMatrix& m, const Tolerance& tol);

HermEig herm_eig(const CMatrix& m, const Tolerance& tol);

RVector singular_values(const CMatrix& m);

Index svd_rank(const CMatrix& m, const Tolerance& tol);

bool is_psd(const CMatrix& m, const Tolerance& tol);

// Positive square root; eigenvalues inside the psd floor are clamped to zero.
CMatrix psd_sqrt(const CMatrix& m, const Tolerance& tol);

CMatrix pinv(const CMatrix& m, const Tolerance& tol);

// Orthonormal basis (as columns) of ker(m); cols() - svd_rank(m) columns.
CMatrix nullspace(const CMatrix& m, const Tolerance& tol);

// A ⊗ B laid out as the block matrix [a_ij B].
CMatrix kron(const CMatrix& a, const CMatrix& b);

CMatrix matrix_unit(Index d, Index i, Index j);

CVector basis_vector(Index d, Index i);

// |x><y|, the map z -> <y, z> x.
CMatrix ket_bra(const CVector& x, const CVector& y);

// Rotates a vector so its first entry with modulus above `floor` is real
// and positive. Used to make eigenvector output deterministic.
void fix_phase(Eigen::Ref<CVector> v, double floor = 1e-12);

}  // namespace ebx
