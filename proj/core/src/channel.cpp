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

#include "ebx/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "ebx/error.hpp"

namespace ebx {
namespace {

void require_finite(const CMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " has non-finite entries");
  }
}

void require_shape(const CMatrix& m, Index rows, Index cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    std::ostringstream os;
    os << what << " is " << m.rows() << "x" << m.cols() << ", expected " << rows << "x"
       << cols;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  require_finite(m, what);
}

void require_positive_dims(Index d1, Index d2) {
  if (d1 <= 0 || d2 <= 0) {
    throw Error(ErrorCode::DimensionMismatch, "channel dimensions must be positive");
  }
}

Complex trace_product(const CMatrix& x, const CMatrix& f) {
  return x.cwiseProduct(f.transpose()).sum();
}

}  // namespace

Channel::Channel(KrausSet kraus, std::string label)
    : d1_(kraus.d1), d2_(kraus.d2), label_(std::move(label)) {
  require_positive_dims(d1_, d2_);
  if (kraus.operators.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "Kraus set must be nonempty");
  }
  for (const auto& v : kraus.operators) require_shape(v, d1_, d2_, "Kraus operator");
  rep_ = std::move(kraus);
}

Channel::Channel(ChoiMatrix choi, std::string label)
    : d1_(choi.d1), d2_(choi.d2), label_(std::move(label)) {
  require_positive_dims(d1_, d2_);
  require_shape(choi.matrix, d1_ * d2_, d1_ * d2_, "Choi matrix");
  rep_ = std::move(choi);
}

Channel::Channel(HolevoEnsemble holevo, std::string label)
    : d1_(holevo.d1), d2_(holevo.d2), label_(std::move(label)) {
  require_positive_dims(d1_, d2_);
  for (const auto& t : holevo.terms) {
    require_shape(t.F, d1_, d1_, "Holevo F");
    require_shape(t.R, d2_, d2_, "Holevo R");
  }
  rep_ = std::move(holevo);
}

Channel Channel::with_label(std::string label) const {
  Channel copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

CMatrix apply(const Channel& ch, const CMatrix& x) {
  if (x.rows() != ch.d1() || x.cols() != ch.d1()) {
    std::ostringstream os;
    os << "input is " << x.rows() << "x" << x.cols() << ", channel expects " << ch.d1()
       << "x" << ch.d1();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  const Index d1 = ch.d1();
  const Index d2 = ch.d2();
  CMatrix out = CMatrix::Zero(d2, d2);
  if (const auto* k = ch.kraus()) {
    for (const auto& v : k->operators) out += v.adjoint() * x * v;
  } else if (const auto* c = ch.choi()) {
    for (Index i = 0; i < d1; ++i) {
      for (Index j = 0; j < d1; ++j) {
        if (x(i, j) != Complex(0.0)) out += x(i, j) * c->matrix.block(i * d2, j * d2, d2, d2);
      }
    }
  } else {
    for (const auto& t : ch.holevo()->terms) out += trace_product(x, t.F) * t.R;
  }
  return out;
}

ChoiMatrix to_choi(const Channel& ch) {
  const Index d1 = ch.d1();
  const Index d2 = ch.d2();
  if (const auto* c = ch.choi()) return *c;
  ChoiMatrix out{d1, d2, CMatrix::Zero(d1 * d2, d1 * d2)};
  for (Index i = 0; i < d1; ++i) {
    for (Index j = 0; j < d1; ++j) {
      out.matrix.block(i * d2, j * d2, d2, d2) = ebx::apply(ch, matrix_unit(d1, i, j));
    }
  }
  return out;
}

KrausSet choi_to_kraus(const ChoiMatrix& c, const Tolerance& tol) {
  const Index d1 = c.d1;
  const Index d2 = c.d2;
  if (!is_hermitian(c.matrix, tol) || !is_psd(c.matrix, tol)) {
    throw Error(ErrorCode::NotCP, "Choi matrix is not positive semidefinite");
  }
  const HermEig eig = herm_eig(c.matrix, tol);
  KrausSet out{d1, d2, {}};
  const double lmax = eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0;
  const double cutoff = tol.rank_rel * lmax;
  for (Index m = 0; m < eig.values.size(); ++m) {
    const double lambda = eig.values(m);
    if (!(lambda > cutoff)) continue;
    const double s = std::sqrt(lambda);
    CMatrix v(d1, d2);
    for (Index i = 0; i < d1; ++i) {
      for (Index k = 0; k < d2; ++k) v(i, k) = s * std::conj(eig.vectors(i * d2 + k, m));
    }
    out.operators.push_back(std::move(v));
  }
  if (out.operators.empty()) out.operators.push_back(CMatrix::Zero(d1, d2));
  return out;
}

namespace {

struct SpectralPiece {
  double weight;
  CVector vec;
};

std::vector<SpectralPiece> refine_psd(const CMatrix& m, const Tolerance& tol) {
  if (!is_hermitian(m, tol) || !is_psd(m, tol)) {
    throw Error(ErrorCode::NotPSD, "Holevo term is not positive semidefinite");
  }
  const HermEig eig = herm_eig(m, tol);
  std::vector<SpectralPiece> out;
  if (eig.values.size() == 0) return out;
  const double lmax = eig.values.maxCoeff();
  if (!(lmax > 0.0)) return out;
  for (Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) > tol.rank_rel * lmax) {
      out.push_back({eig.values(k), eig.vectors.col(k)});
    }
  }
  return out;
}

}  // namespace

KrausSet holevo_to_kraus(const HolevoEnsemble& h, const Tolerance& tol) {
  KrausSet out{h.d1, h.d2, {}};
  for (const auto& term : h.terms) {
    const auto xs = refine_psd(term.F, tol);
    const auto ys = refine_psd(term.R, tol);
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        out.operators.push_back(std::sqrt(x.weight * y.weight) * ket_bra(x.vec, y.vec));
      }
    }
  }
  if (out.operators.empty()) out.operators.push_back(CMatrix::Zero(h.d1, h.d2));
  return out;
}

KrausSet kraus_of(const Channel& ch, const Tolerance& tol) {
  if (const auto* k = ch.kraus()) return *k;
  if (const auto* h = ch.holevo()) return holevo_to_kraus(*h, tol);
  return choi_to_kraus(*ch.choi(), tol);
}

Channel adjoint(const Channel& ch) {
  const Index d1 = ch.d1();
  const Index d2 = ch.d2();
  std::string label = ch.label().empty() ? std::string() : ch.label() + "*";
  if (const auto* k = ch.kraus()) {
    KrausSet out{d2, d1, {}};
    for (const auto& v : k->operators) out.operators.push_back(v.adjoint());
    return Channel(std::move(out), std::move(label));
  }
  if (const auto* h = ch.holevo()) {
    // <Phi(X), Y> = sum conj(tr(X F)) tr(R^* Y) = sum tr(X^* F^*) tr(Y R^*).
    HolevoEnsemble out{d2, d1, {}};
    for (const auto& t : h->terms) out.terms.push_back({t.R.adjoint(), t.F.adjoint()});
    return Channel(std::move(out), std::move(label));
  }
  const CMatrix& c = ch.choi()->matrix;
  ChoiMatrix out{d2, d1, CMatrix(d1 * d2, d1 * d2)};
  for (Index i = 0; i < d1; ++i) {
    for (Index j = 0; j < d1; ++j) {
      for (Index k = 0; k < d2; ++k) {
        for (Index l = 0; l < d2; ++l) {
          out.matrix(k * d1 + i, l * d1 + j) = std::conj(c(i * d2 + k, j * d2 + l));
        }
      }
    }
  }
  return Channel(std::move(out), std::move(label));
}

ChannelPredicates predicates(const Channel& ch, const Tolerance& tol) {
  const Index d1 = ch.d1();
  const Index d2 = ch.d2();
  const ChoiMatrix c = to_choi(ch);
  ChannelPredicates p;
  p.is_hermiticity_preserving = is_hermitian(c.matrix, tol);
  p.is_cp = p.is_hermiticity_preserving && is_psd(c.matrix, tol);
  p.is_unital =
      max_abs(ebx::apply(ch, CMatrix::Identity(d1, d1)) - CMatrix::Identity(d2, d2)) <= tol.eq_abs;
  CMatrix reduced(d1, d1);
  for (Index i = 0; i < d1; ++i) {
    for (Index j = 0; j < d1; ++j) reduced(i, j) = c.matrix.block(i * d2, j * d2, d2, d2).trace();
  }
  p.is_tp = max_abs(reduced - CMatrix::Identity(d1, d1)) <= tol.eq_abs;
  return p;
}

StinespringTriple stinespring(const Channel& ch, const Tolerance& tol) {
  const Index d1 = ch.d1();
  const Index d2 = ch.d2();
  const KrausSet k = kraus_of(ch, tol);
  const Index r = static_cast<Index>(k.operators.size());
  StinespringTriple out{r, CMatrix::Zero(d1 * r, d2)};
  for (Index i = 0; i < r; ++i) {
    for (Index a = 0; a < d1; ++a) out.isometry.row(a * r + i) = k.operators[i].row(a);
  }
  const CMatrix& v = out.isometry;
  const CMatrix id_r = CMatrix::Identity(r, r);
  double worst = 0.0;
  for (Index a = 0; a < d1; ++a) {
    for (Index b = 0; b < d1; ++b) {
      const CMatrix e = matrix_unit(d1, a, b);
      const CMatrix lifted = v.adjoint() * kron(e, id_r) * v;
      worst = std::max(worst, max_abs(lifted - ebx::apply(ch, e)));
    }
  }
  if (worst > tol.eq_abs) {
    std::ostringstream os;
    os << "dilation reproduces the channel only to " << worst;
    throw Error(ErrorCode::VerificationFailed, os.str());
  }
  return out;
}

FixedPointCheck fixed_point_check(const Channel& ch, const CMatrix& a, const Tolerance& tol) {
  if (ch.d1() != ch.d2()) {
    throw Error(ErrorCode::DimensionMismatch, "fixed points need a map M_d -> M_d");
  }
  const Index d = ch.d1();
  if (a.rows() != d || a.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "test matrix does not match channel dimension");
  }
  const ChannelPredicates p = predicates(ch, tol);
  if (!p.is_cp || !p.is_unital || !p.is_tp) {
    throw Error(ErrorCode::NotUnitalTP, "fixed-point check needs a unital trace-preserving CP map");
  }
  FixedPointCheck out;
  out.is_fixed = max_abs(ebx::apply(ch, a) - a) <= tol.eq_abs;
  double worst = 0.0;
  for (const auto& v : kraus_of(ch, tol).operators) {
    worst = std::max(worst, max_abs(a * v - v * a));
  }
  out.commutes_with_all_kraus = worst <= tol.eq_abs;
  if (out.is_fixed != out.commutes_with_all_kraus) {
    std::ostringstream os;
    os << "fixed-point residual " << max_abs(ebx::apply(ch, a) - a)
       << " disagrees with Kraus commutator residual " << worst;
    out.diagnostic = os.str();
  }
  return out;
}

CommutantInfo commutant_dimension(const Channel& ch, const Tolerance& tol) {
  const Index d1 = ch.d1();
  const Index d2 = ch.d2();
  const Index n = d2 * d2;
  const CMatrix id = CMatrix::Identity(d2, d2);
  CMatrix system(d1 * d1 * n, n);
  Index row = 0;
  double scale = 0.0;
  for (Index i = 0; i < d1; ++i) {
    for (Index j = 0; j < d1; ++j) {
      const CMatrix b = ebx::apply(ch, matrix_unit(d1, i, j));
      scale = std::max(scale, max_abs(b));
      // vec(AB - BA) = (B^T ⊗ I - I ⊗ B) vec(A), column-major vec.
      system.middleRows(row, n) = kron(b.transpose(), id) - kron(id, b);
      row += n;
    }
  }
  // Rank cutoff relative to the range itself: when the range is scalar the
  // commutator system is pure rounding noise and its own sigma_max is no scale.
  const RVector sv = singular_values(system);
  const double cutoff = tol.rank_rel * std::max(sv.size() > 0 ? sv.maxCoeff() : 0.0, scale);
  CommutantInfo out;
  out.dim = n - static_cast<Index>((sv.array() > cutoff).count());
  out.is_irreducible = out.dim == 1;
  return out;
}

Channel difference(const Channel& big, const Channel& small) {
  if (big.d1() != small.d1() || big.d2() != small.d2()) {
    throw Error(ErrorCode::DimensionMismatch, "channels act between different matrix algebras");
  }
  ChoiMatrix c = to_choi(big);
  c.matrix -= to_choi(small).matrix;
  return Channel(std::move(c));
}

double basis_distance(const Channel& a, const Channel& b) {
  if (a.d1() != b.d1() || a.d2() != b.d2()) {
    throw Error(ErrorCode::DimensionMismatch, "channels act between different matrix algebras");
  }
  return max_abs(to_choi(a).matrix - to_choi(b).matrix);
}

CMatrix partial_transpose(const ChoiMatrix& c) {
  const Index d1 = c.d1;
  const Index d2 = c.d2;
  CMatrix out(d1 * d2, d1 * d2);
  for (Index i = 0; i < d1; ++i) {
    for (Index j = 0; j < d1; ++j) {
      out.block(i * d2, j * d2, d2, d2) = c.matrix.block(i * d2, j * d2, d2, d2).transpose();
    }
  }
  return out;
}

}  // namespace ebx
