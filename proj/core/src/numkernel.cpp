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

#include "ebx/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ebx/error.hpp"

namespace ebx {

void Tolerance::validate() const {
  for (double v : {rank_rel, psd_floor, eq_abs}) {
    if (!(v > 0.0) || v > 1e-3) {
      std::ostringstream os;
      os << "tolerance fields must lie in (0, 1e-3], got rank_rel=" << rank_rel
         << " psd_floor=" << psd_floor << " eq_abs=" << eq_abs;
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
  }
}

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol.eq_abs;
}

CMatrix checked_hermitian(const CMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotHermitian, "matrix is not square");
  }
  const double asym = max_abs(m - m.adjoint());
  if (asym > tol.eq_abs) {
    std::ostringstream os;
    os << "||m - m*||_max = " << asym << " exceeds " << tol.eq_abs;
    throw Error(ErrorCode::NotHermitian, os.str());
  }
  return (m + m.adjoint()) * 0.5;
}

void fix_phase(Eigen::Ref<CVector> v, double floor) {
  for (Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > floor) {
      v *= std::conj(v(i)) / mag;
      v(i) = Complex(mag, 0.0);
      return;
    }
  }
}

HermEig herm_eig(const CMatrix& m, const Tolerance& tol) {
  const CMatrix h = checked_hermitian(m, tol);
  const Index n = h.rows();
  HermEig out;
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  for (Index j = 0; j < n; ++j) fix_phase(out.vectors.col(j));
  return out;
}

RVector singular_values(const CMatrix& m) {
  if (m.size() == 0) return RVector();
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues();
}

namespace {

Index count_above_cutoff(const RVector& sv, double rank_rel) {
  if (sv.size() == 0) return 0;
  const double cutoff = rank_rel * sv.maxCoeff();
  return static_cast<Index>((sv.array() > cutoff).count());
}

}  // namespace

Index svd_rank(const CMatrix& m, const Tolerance& tol) {
  return count_above_cutoff(singular_values(m), tol.rank_rel);
}

bool is_psd(const CMatrix& m, const Tolerance& tol) {
  const HermEig eig = herm_eig(m, tol);
  if (eig.values.size() == 0) return true;
  const double scale = std::max(eig.values.cwiseAbs().maxCoeff(), 1.0);
  return eig.values.minCoeff() >= -tol.psd_floor * scale;
}

CMatrix psd_sqrt(const CMatrix& m, const Tolerance& tol) {
  const HermEig eig = herm_eig(m, tol);
  if (eig.values.size() == 0) return CMatrix(0, 0);
  const double scale = std::max(eig.values.cwiseAbs().maxCoeff(), 1.0);
  if (eig.values.minCoeff() < -tol.psd_floor * scale) {
    std::ostringstream os;
    os << "minimum eigenvalue " << eig.values.minCoeff() << " below psd floor";
    throw Error(ErrorCode::NotPSD, os.str());
  }
  const RVector roots = eig.values.cwiseMax(0.0).cwiseSqrt();
  return eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

CMatrix pinv(const CMatrix& m, const Tolerance& tol) {
  if (m.size() == 0) return CMatrix::Zero(m.cols(), m.rows());
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& sv = svd.singularValues();
  const double cutoff = tol.rank_rel * sv.maxCoeff();
  RVector inv = RVector::Zero(sv.size());
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
  }
  return svd.matrixV() * inv.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
}

CMatrix nullspace(const CMatrix& m, const Tolerance& tol) {
  const Index n = m.cols();
  if (m.rows() == 0) return CMatrix::Identity(n, n);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const Index rank = count_above_cutoff(svd.singularValues(), tol.rank_rel);
  CMatrix basis = svd.matrixV().rightCols(n - rank);
  for (Index j = 0; j < basis.cols(); ++j) fix_phase(basis.col(j));
  return basis;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix matrix_unit(Index d, Index i, Index j) {
  CMatrix e = CMatrix::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

CVector basis_vector(Index d, Index i) {
  CVector e = CVector::Zero(d);
  e(i) = 1.0;
  return e;
}

CMatrix ket_bra(const CVector& x, const CVector& y) { return x * y.adjoint(); }

}  // namespace ebx
