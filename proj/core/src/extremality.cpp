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

#include "ebx/extremality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "ebx/error.hpp"

namespace ebx {
namespace {

CMatrix hermitian_part(const CMatrix& m) { return (m + m.adjoint()) * 0.5; }

// E_ii, E_ij + E_ji and i(E_ij - E_ji) for i < j.
std::vector<CMatrix> hermitian_basis(Index d) {
  std::vector<CMatrix> out;
  for (Index i = 0; i < d; ++i) out.push_back(matrix_unit(d, i, i));
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      out.push_back(matrix_unit(d, i, j) + matrix_unit(d, j, i));
      out.push_back(Complex(0.0, 1.0) * (matrix_unit(d, i, j) - matrix_unit(d, j, i)));
    }
  }
  return out;
}

// Common eigenvectors of a commuting family restricted to ran(q). Each matrix
// in turn splits the current subspace into its eigenspaces; a subspace on
// which every remaining matrix is scalar is emitted as-is.
void refine_joint_basis(const CMatrix& q, const std::vector<CMatrix>& family, std::size_t next,
                        const Tolerance& tol, std::vector<CVector>& out) {
  const Index m = q.cols();
  if (m == 1) {
    out.push_back(q.col(0));
    return;
  }
  for (std::size_t k = next; k < family.size(); ++k) {
    const CMatrix restricted = hermitian_part(q.adjoint() * family[k] * q);
    const HermEig eig = herm_eig(restricted, tol);
    const double cluster = 1e-7 * std::max(1.0, eig.values.cwiseAbs().maxCoeff());
    if (eig.values(0) - eig.values(m - 1) <= cluster) continue;
    Index start = 0;
    for (Index i = 1; i <= m; ++i) {
      if (i == m || eig.values(i - 1) - eig.values(i) > cluster) {
        refine_joint_basis(q * eig.vectors.middleCols(start, i - start), family, k + 1, tol, out);
        start = i;
      }
    }
    return;
  }
  for (Index j = 0; j < m; ++j) out.push_back(q.col(j));
}

Index leading_index(const CMatrix& p) {
  for (Index i = 0; i < p.rows(); ++i) {
    if (p(i, i).real() > 1e-6) return i;
  }
  return p.rows();
}

// Orthonormal basis of the range of a projection.
CMatrix range_basis(const CMatrix& p, const Tolerance& tol) {
  const HermEig eig = herm_eig(p, tol);
  const Index r = static_cast<Index>((eig.values.array() > 0.5).count());
  return eig.vectors.leftCols(r);
}

void require_same_dims(const Channel& a, const Channel& b) {
  if (a.d1() != b.d1() || a.d2() != b.d2()) {
    throw Error(ErrorCode::DimensionMismatch, "channels act between different matrix algebras");
  }
}

void require_unital_eb_input(const Channel& ch, const Tolerance& tol) {
  const ChannelPredicates p = predicates(ch, tol);
  if (!p.is_cp) throw Error(ErrorCode::NotCP, "channel is not completely positive");
  if (!p.is_unital) throw Error(ErrorCode::NotUnital, "channel is not unital");
  const EBVerdict v = eb_verdict(ch, tol);
  if (v.is_eb == Tristate::no) {
    throw Error(ErrorCode::NotEB, "channel is not entanglement breaking (" + v.provenance + ")");
  }
}

}  // namespace

Channel CanonicalEBForm::to_channel(std::string label) const {
  HolevoEnsemble h{d1, d2, {}};
  for (const auto& b : blocks) h.terms.push_back({ket_bra(b.u, b.u), b.P});
  return Channel(std::move(h), std::move(label));
}

void CanonicalEBForm::validate(const Tolerance& tol) const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::StructureViolation, what); };
  if (blocks.empty()) fail("canonical form has no blocks");
  CMatrix total = CMatrix::Zero(d2, d2);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& bi = blocks[i];
    if (bi.u.size() != d1 || bi.P.rows() != d2 || bi.P.cols() != d2) fail("block dimensions");
    if (std::abs(bi.u.norm() - 1.0) > tol.eq_abs) fail("state vector is not a unit vector");
    if (max_abs(bi.P * bi.P - bi.P) > tol.eq_abs || !is_hermitian(bi.P, tol)) {
      fail("block matrix is not an orthogonal projection");
    }
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const auto& bj = blocks[j];
      if (std::abs(bi.u.dot(bj.u)) >= 1.0 - tol.eq_abs) fail("block states are not distinct");
      if (max_abs(bi.P * bj.P) > tol.eq_abs) fail("block projections are not orthogonal");
    }
    total += bi.P;
  }
  if (max_abs(total - CMatrix::Identity(d2, d2)) > tol.eq_abs) {
    fail("block projections do not sum to the identity");
  }
}

CanonicalEBForm extract_canonical(const Channel& ch, const Tolerance& tol) {
  SeededRng rng(kCanonicalSeed);
  return extract_canonical(ch, tol, rng);
}

CanonicalEBForm extract_canonical(const Channel& ch, const Tolerance& tol, SeededRng& rng) {
  require_unital_eb_input(ch, tol);
  const Index d1 = ch.d1();
  const Index d2 = ch.d2();

  std::vector<CMatrix> images;
  for (const auto& h : hermitian_basis(d1)) images.push_back(hermitian_part(ebx::apply(ch, h)));

  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      const double comm = max_abs(images[i] * images[j] - images[j] * images[i]);
      if (comm > tol.eq_abs) {
        std::ostringstream os;
        os << "range is not commutative (commutator norm " << comm << ")";
        throw Error(ErrorCode::NotExtreme, os.str());
      }
    }
  }

  // A generic combination separates the joint eigenspaces; the basis images
  // that follow it only matter when the draw was unlucky.
  std::vector<CMatrix> family;
  CMatrix generic = CMatrix::Zero(d2, d2);
  for (const auto& b : images) generic += rng.uniform(-1.0, 1.0) * b;
  family.push_back(generic);
  family.insert(family.end(), images.begin(), images.end());
  std::vector<CVector> joint;
  refine_joint_basis(CMatrix::Identity(d2, d2), family, 0, tol, joint);

  const Channel dual = adjoint(ch);
  CanonicalEBForm form{d1, d2, {}};
  for (const CVector& v : joint) {
    const CMatrix state = hermitian_part(ebx::apply(dual, ket_bra(v, v)));
    const Index rank = svd_rank(state, tol);
    const double trace = state.trace().real();
    if (rank != 1 || std::abs(trace - 1.0) > tol.eq_abs) {
      std::ostringstream os;
      os << "state on a joint eigenvector is not pure (rank " << rank << ", trace " << trace
         << ")";
      throw Error(ErrorCode::NotExtreme, os.str());
    }
    const HermEig eig = herm_eig(state, tol);
    CVector u = eig.vectors.col(0);
    u.normalize();
    fix_phase(u);
    auto same = std::find_if(form.blocks.begin(), form.blocks.end(), [&](const CanonicalBlock& b) {
      return std::abs(b.u.dot(u)) >= 1.0 - tol.eq_abs;
    });
    if (same != form.blocks.end()) {
      same->P += ket_bra(v, v);
    } else {
      form.blocks.push_back({u, ket_bra(v, v)});
    }
  }

  std::stable_sort(form.blocks.begin(), form.blocks.end(),
                   [](const CanonicalBlock& a, const CanonicalBlock& b) {
                     return leading_index(a.P) < leading_index(b.P);
                   });
  for (auto& b : form.blocks) b.P = hermitian_part(b.P);

  try {
    form.validate(tol);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotExtreme, std::string("extracted form invalid: ") + e.what());
  }
  const double err = basis_distance(form.to_channel(), ch);
  if (err > tol.eq_abs) {
    std::ostringstream os;
    os << "canonical form reproduces the channel only to " << err;
    throw Error(ErrorCode::NotExtreme, os.str());
  }
  return form;
}

ExtremalityReport is_cstar_extreme(const Channel& ch, const Tolerance& tol) {
  require_unital_eb_input(ch, tol);
  ExtremalityReport r;
  r.choi_rank = choi_rank(ch, tol);
  r.is_cstar_extreme = r.choi_rank == ch.d2();
  try {
    r.canonical = extract_canonical(ch, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotExtreme) throw;
  }
  if (r.is_cstar_extreme != r.canonical.has_value()) {
    std::ostringstream os;
    os << "Choi rank " << r.choi_rank << " vs d2 " << ch.d2() << " disagrees with canonical "
       << "extraction (" << (r.canonical ? "succeeded" : "failed") << ")";
    throw Error(ErrorCode::InternalInconsistency, os.str());
  }
  if (r.canonical && ch.d1() == ch.d2()) {
    r.is_cq_linear_extreme_in_ucp = cq_remark_flags(*r.canonical, tol).all_overlaps_nonzero;
  }
  const CommutantInfo c = commutant_dimension(ch, tol);
  r.commutant_dim = c.dim;
  r.is_irreducible = c.is_irreducible;
  return r;
}

CqRemarkFlags cq_remark_flags(const CanonicalEBForm& form, const Tolerance& tol) {
  // Splitting a block into rank-one pieces repeats its state, and a state
  // overlaps itself with modulus one, so only distinct blocks matter.
  double min_overlap = 1.0;
  for (std::size_t i = 0; i < form.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < form.blocks.size(); ++j) {
      min_overlap = std::min(min_overlap, std::abs(form.blocks[i].u.dot(form.blocks[j].u)));
    }
  }
  return {min_overlap > tol.eq_abs};
}

bool dominates_cp(const Channel& big, const Channel& small, const Tolerance& tol) {
  require_same_dims(big, small);
  const CMatrix diff = to_choi(big).matrix - to_choi(small).matrix;
  return is_hermitian(diff, tol) && is_psd(diff, tol);
}

namespace {

// For a canonical big = sum <u_i, . u_i> P_i dominating small, the difference
// is X -> sqrt(I - R) big(X) sqrt(I - R) with R = small(I); returns whether
// that Holevo ensemble reproduces big - small.
bool canonical_difference_certified(const Channel& big, const Channel& small,
                                    const Tolerance& tol) {
  try {
    const CanonicalEBForm form = extract_canonical(big, tol);
    const RNDerivative rn = rn_derivative(form, small, tol);
    const CMatrix rest = psd_sqrt(CMatrix::Identity(big.d2(), big.d2()) - rn.R, tol);
    HolevoEnsemble h{big.d1(), big.d2(), {}};
    for (const auto& b : form.blocks) h.terms.push_back({ket_bra(b.u, b.u), rest * b.P * rest});
    return basis_distance(Channel(std::move(h)), difference(big, small)) <= tol.eq_abs;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Tristate dominates_eb(const Channel& big, const Channel& small, const Tolerance& tol) {
  if (!dominates_cp(big, small, tol)) return Tristate::no;
  const Tristate verdict = eb_verdict(difference(big, small), tol).is_eb;
  if (verdict != Tristate::unknown) return verdict;
  return canonical_difference_certified(big, small, tol) ? Tristate::yes : Tristate::unknown;
}

RNDerivative rn_derivative(const CanonicalEBForm& canonical, const Channel& psi,
                           const Tolerance& tol) {
  const Channel phi = canonical.to_channel();
  require_same_dims(phi, psi);
  if (!predicates(psi, tol).is_cp) throw Error(ErrorCode::NotCP, "psi is not CP");
  if (!dominates_cp(phi, psi, tol)) {
    throw Error(ErrorCode::PreconditionDomination, "psi is not CP-dominated by phi");
  }
  const Index d1 = phi.d1();
  const Index d2 = phi.d2();
  RNDerivative out;
  out.R = hermitian_part(ebx::apply(psi, CMatrix::Identity(d1, d1)));
  double residual = 0.0;
  for (std::size_t i = 0; i < canonical.blocks.size(); ++i) {
    const CMatrix& pi = canonical.blocks[i].P;
    out.per_block.push_back(pi * out.R * pi);
    for (std::size_t j = 0; j < canonical.blocks.size(); ++j) {
      if (i != j) residual = std::max(residual, max_abs(pi * out.R * canonical.blocks[j].P));
    }
  }
  for (Index a = 0; a < d1; ++a) {
    for (Index b = 0; b < d1; ++b) {
      const CMatrix e = matrix_unit(d1, a, b);
      const CMatrix image = ebx::apply(phi, e);
      residual = std::max(residual, max_abs(ebx::apply(psi, e) - image * out.R));
      residual = std::max(residual, max_abs(image * out.R - out.R * image));
    }
  }
  out.residual = residual;
  if (residual > tol.eq_abs) {
    std::ostringstream os;
    os << "Psi(X) = Phi(X) R holds only to " << residual << "; phi may not be canonical";
    throw Error(ErrorCode::VerificationFailed, os.str());
  }
  const HermEig eig = herm_eig(out.R, tol);
  const double slack = tol.psd_floor * std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  if (eig.values(d2 - 1) < -slack || eig.values(0) > 1.0 + slack) {
    throw Error(ErrorCode::VerificationFailed, "derivative is not a positive contraction");
  }
  return out;
}

Channel rank_one_map(const CVector& x, const CVector& y) {
  HolevoEnsemble h{x.size(), y.size(), {{ket_bra(x, x), ket_bra(y, y)}}};
  return Channel(std::move(h), "E_{x,y}");
}

DominatedPiece locate_dominated_rank_one(const CanonicalEBForm& canonical, const CVector& x,
                                         const CVector& y, const Tolerance& tol) {
  if (x.size() != canonical.d1 || y.size() != canonical.d2) {
    throw Error(ErrorCode::DimensionMismatch, "vector sizes do not match the canonical form");
  }
  if (!(x.norm() > 0.0) || !(y.norm() > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "x and y must be nonzero");
  }
  if (!dominates_cp(canonical.to_channel(), rank_one_map(x, y), tol)) {
    throw Error(ErrorCode::NotDominated, "E_{x,y} is not CP-dominated by the canonical map");
  }
  // CP domination at psd_floor leaves O(sqrt(psd_floor)) room in x and y.
  const double match = std::sqrt(tol.psd_floor);
  const CVector xn = x.normalized();
  const CMatrix id = CMatrix::Identity(canonical.d2, canonical.d2);
  for (std::size_t j = 0; j < canonical.blocks.size(); ++j) {
    const auto& b = canonical.blocks[j];
    if (std::abs(xn.dot(b.u)) >= 1.0 - match && ((id - b.P) * y).norm() <= match * y.norm()) {
      DominatedPiece out{j, x.squaredNorm() * ket_bra(y, y)};
      const double scale = std::max(1.0, max_abs(out.R));
      for (std::size_t k = 0; k < canonical.blocks.size(); ++k) {
        const CMatrix expected = k == j ? out.R : CMatrix::Zero(canonical.d2, canonical.d2);
        if (max_abs(canonical.blocks[k].P * out.R - expected) > match * scale) {
          throw Error(ErrorCode::StructureViolation, "P_k R_j != delta_kj R_j");
        }
      }
      return out;
    }
  }
  throw Error(ErrorCode::StructureViolation,
              "domination holds but no block matches (x, y); tolerance miscalibrated?");
}

ArvesonDerivative arveson_derivative(const Channel& phi, const Channel& psi,
                                     const Tolerance& tol) {
  require_same_dims(phi, psi);
  if (!dominates_cp(phi, psi, tol)) {
    throw Error(ErrorCode::PreconditionDomination, "psi is not CP-dominated by phi");
  }
  const Index d1 = phi.d1();
  const Index d2 = phi.d2();
  const KrausSet k = kraus_of(phi, tol);
  const Index n = static_cast<Index>(k.operators.size());
  CMatrix w(d1 * d2, n);
  for (Index c = 0; c < n; ++c) {
    for (Index i = 0; i < d1; ++i) {
      for (Index a = 0; a < d2; ++a) w(i * d2 + a, c) = std::conj(k.operators[c](i, a));
    }
  }
  const CMatrix cpsi = to_choi(psi).matrix;
  const CMatrix wp = pinv(w, tol);
  ArvesonDerivative out;
  out.T = hermitian_part(wp * cpsi * wp.adjoint());
  out.residual = max_abs(w * out.T * w.adjoint() - cpsi);
  if (out.residual > 1e-8 * (1.0 + max_abs(cpsi))) {
    std::ostringstream os;
    os << "least-squares residual " << out.residual << "; psi's Kraus span exceeds phi's";
    throw Error(ErrorCode::VerificationFailed, os.str());
  }
  const HermEig eig = herm_eig(out.T, tol);
  const double slack = tol.psd_floor * std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  if (eig.values(n - 1) < -slack || eig.values(0) > 1.0 + slack) {
    throw Error(ErrorCode::VerificationFailed, "coefficient matrix is not a positive contraction");
  }
  if (eig.values(n - 1) < 0.0 || eig.values(0) > 1.0) {
    const RVector clamped = eig.values.cwiseMax(0.0).cwiseMin(1.0);
    out.T = eig.vectors * clamped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  }
  return out;
}

CMatrix extremality_witness(const CanonicalEBForm& canonical, const Channel& psi,
                            const Tolerance& tol) {
  const Channel phi = canonical.to_channel();
  require_same_dims(phi, psi);
  if (!dominates_cp(phi, psi, tol)) {
    throw Error(ErrorCode::PreconditionDomination, "psi is not dominated by phi");
  }
  const Index d1 = phi.d1();
  const CMatrix r = hermitian_part(ebx::apply(psi, CMatrix::Identity(d1, d1)));
  if (svd_rank(r, tol) != phi.d2()) {
    throw Error(ErrorCode::NotInvertible, "Psi(I) is not invertible");
  }
  const CMatrix z = psd_sqrt(r, tol);
  double worst = 0.0;
  for (Index a = 0; a < d1; ++a) {
    for (Index b = 0; b < d1; ++b) {
      const CMatrix e = matrix_unit(d1, a, b);
      worst = std::max(worst, max_abs(z.adjoint() * ebx::apply(phi, e) * z - ebx::apply(psi, e)));
    }
  }
  if (worst > tol.eq_abs) {
    std::ostringstream os;
    os << "Ad_Z o Phi reproduces Psi only to " << worst;
    throw Error(ErrorCode::VerificationFailed, os.str());
  }
  return z;
}

UnitaryEquivalence unitary_equivalent(const CanonicalEBForm& a, const CanonicalEBForm& b,
                                      const Tolerance& tol) {
  UnitaryEquivalence out;
  if (a.d1 != b.d1 || a.d2 != b.d2 || a.blocks.size() != b.blocks.size()) return out;
  const Index d2 = a.d2;
  std::vector<bool> used(b.blocks.size(), false);
  CMatrix u = CMatrix::Zero(d2, d2);
  for (const auto& ba : a.blocks) {
    bool matched = false;
    for (std::size_t j = 0; j < b.blocks.size() && !matched; ++j) {
      const auto& bb = b.blocks[j];
      if (used[j] || std::abs(ba.u.dot(bb.u)) < 1.0 - tol.eq_abs) continue;
      const CMatrix qa = range_basis(ba.P, tol);
      const CMatrix qb = range_basis(bb.P, tol);
      if (qa.cols() != qb.cols()) return out;
      // U maps ran(P_b) onto ran(P_a), so U^* P_a U = P_b.
      u += qa * qb.adjoint();
      used[j] = true;
      matched = true;
    }
    if (!matched) return out;
  }
  const Channel ca = a.to_channel();
  const Channel cb = b.to_channel();
  double worst = 0.0;
  for (Index i = 0; i < a.d1; ++i) {
    for (Index j = 0; j < a.d1; ++j) {
      const CMatrix e = matrix_unit(a.d1, i, j);
      worst = std::max(worst, max_abs(u.adjoint() * ebx::apply(ca, e) * u - ebx::apply(cb, e)));
    }
  }
  if (worst > tol.eq_abs) return out;
  out.equivalent = true;
  out.witness_unitary = u;
  return out;
}

}  // namespace ebx
