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

// Reference computations used only by the tests. Each one follows the
// defining formula directly with explicit loops, so it shares no code path
// with the library routine it checks.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ebx::oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// C[(i, k), (j, l)] = (V^* E_ij V)[k, l] = sum_m conj(V_m[i, k]) V_m[j, l].
inline Mat choi_from_kraus(const std::vector<Mat>& ops, int d1, int d2) {
  Mat c = Mat::Zero(d1 * d2, d1 * d2);
  for (const Mat& v : ops) {
    for (int i = 0; i < d1; ++i)
      for (int k = 0; k < d2; ++k)
        for (int j = 0; j < d1; ++j)
          for (int l = 0; l < d2; ++l) c(i * d2 + k, j * d2 + l) += std::conj(v(i, k)) * v(j, l);
  }
  return c;
}

// C[(i, k), (j, l)] = sum_m F_m[j, i] R_m[k, l], since tr(E_ij F) = F[j, i].
inline Mat choi_from_holevo(const std::vector<std::pair<Mat, Mat>>& terms, int d1, int d2) {
  Mat c = Mat::Zero(d1 * d2, d1 * d2);
  for (const auto& [f, r] : terms) {
    for (int i = 0; i < d1; ++i)
      for (int k = 0; k < d2; ++k)
        for (int j = 0; j < d1; ++j)
          for (int l = 0; l < d2; ++l) c(i * d2 + k, j * d2 + l) += f(j, i) * r(k, l);
  }
  return c;
}

// C[(a, p), (b, q)] = sum_ij t_ij conj(V_i[a, p]) V_j[b, q], the Choi matrix
// of X -> sum_ij t_ij V_i^* X V_j.
inline Mat choi_from_arveson(const std::vector<Mat>& ops, const Mat& t, int d1, int d2) {
  Mat c = Mat::Zero(d1 * d2, d1 * d2);
  const int n = static_cast<int>(ops.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < d1; ++a)
        for (int p = 0; p < d2; ++p)
          for (int b = 0; b < d1; ++b)
            for (int q = 0; q < d2; ++q)
              c(a * d2 + p, b * d2 + q) += t(i, j) * std::conj(ops[i](a, p)) * ops[j](b, q);
  return c;
}

// Phi(X)[k, l] = sum_ij x_ij C[(i, k), (j, l)].
inline Mat apply_choi(const Mat& c, const Mat& x, int d1, int d2) {
  Mat out = Mat::Zero(d2, d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d2; ++k)
        for (int l = 0; l < d2; ++l) out(k, l) += x(i, j) * c(i * d2 + k, j * d2 + l);
  return out;
}

// (id ⊗ T)(C)[(i, k), (j, l)] = C[(i, l), (j, k)].
inline Mat partial_transpose(const Mat& c, int d1, int d2) {
  Mat out(d1 * d2, d1 * d2);
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d2; ++k)
      for (int j = 0; j < d1; ++j)
        for (int l = 0; l < d2; ++l) out(i * d2 + k, j * d2 + l) = c(i * d2 + l, j * d2 + k);
  return out;
}

// Eigenvalues of [[a, b], [conj(b), d]] from the characteristic polynomial,
// in descending order.
inline std::pair<double, double> herm2_eigenvalues(double a, C b, double d) {
  const double mean = 0.5 * (a + d);
  const double radius = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  return {mean + radius, mean - radius};
}

// Rank by modified Gram-Schmidt with re-orthogonalization over the columns.
inline int gram_schmidt_rank(const Mat& m, double rel_tol = 1e-9) {
  double scale = 0.0;
  for (int c = 0; c < m.cols(); ++c) scale = std::max(scale, m.col(c).norm());
  if (scale == 0.0) return 0;
  std::vector<Vec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    Vec v = m.col(c);
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& b : basis) v -= b.dot(v) * b;
    const double n = v.norm();
    if (n > rel_tol * scale) basis.push_back(v / n);
  }
  return static_cast<int>(basis.size());
}

// Dimension of the linear span of a list of matrices (flattened).
inline int span_dimension(const std::vector<Mat>& ops, double rel_tol = 1e-9) {
  if (ops.empty()) return 0;
  Mat stacked(ops[0].size(), static_cast<Eigen::Index>(ops.size()));
  for (std::size_t k = 0; k < ops.size(); ++k) {
    stacked.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Vec>(ops[k].data(), ops[k].size());
  }
  return gram_schmidt_rank(stacked, rel_tol);
}

// PSD test by Cholesky factorization of a slightly shifted m.
inline bool psd_by_cholesky(const Mat& m, double shift = 1e-9) {
  const Mat shifted = m + shift * std::max(1.0, m.cwiseAbs().maxCoeff()) *
                              Mat::Identity(m.rows(), m.cols());
  Eigen::LLT<Mat> llt(shifted);
  return llt.info() == Eigen::Success;
}

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline Mat unit(int d, int i, int j) {
  Mat e = Mat::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

}  // namespace ebx::oracle
