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

#include "ebx/eb_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ebx/error.hpp"

namespace ebx {

std::string_view to_string(Tristate t) noexcept {
  switch (t) {
    case Tristate::yes: return "yes";
    case Tristate::no: return "no";
    case Tristate::unknown: return "unknown";
  }
  return "unknown";
}

Index choi_rank(const Channel& ch, const Tolerance& tol) {
  return svd_rank(to_choi(ch).matrix, tol);
}

bool is_ppt(const Channel& ch, const Tolerance& tol) {
  const ChoiMatrix c = to_choi(ch);
  if (!is_hermitian(c.matrix, tol) || !is_psd(c.matrix, tol)) return false;
  return is_psd(partial_transpose(c), tol);
}

EBVerdict eb_verdict(const Channel& ch, const Tolerance& tol) {
  const ChoiMatrix c = to_choi(ch);
  if (!is_hermitian(c.matrix, tol) || !is_psd(c.matrix, tol)) {
    throw Error(ErrorCode::NotCP, "entanglement-breaking verdict requires a CP map");
  }
  EBVerdict v;
  v.ppt = is_psd(partial_transpose(c), tol);
  const Index dims = ch.d1() * ch.d2();
  const HolevoEnsemble* h = ch.holevo();
  const bool certified =
      h != nullptr && std::all_of(h->terms.begin(), h->terms.end(), [&](const HolevoTerm& t) {
        return is_hermitian(t.F, tol) && is_psd(t.F, tol) && is_hermitian(t.R, tol) &&
               is_psd(t.R, tol);
      });
  if (max_abs(c.matrix) <= tol.eq_abs) {
    v.is_eb = Tristate::yes;
    v.conclusive = true;
    v.provenance = "zero map";
  } else if (certified) {
    v.is_eb = Tristate::yes;
    v.conclusive = true;
    v.certificate = *h;
    v.provenance = "Holevo certificate";
  } else if (!v.ppt) {
    v.is_eb = Tristate::no;
    v.conclusive = true;
    v.provenance = "partial transpose of Choi matrix is not PSD";
  } else if (dims <= 6) {
    v.is_eb = Tristate::yes;
    v.conclusive = true;
    v.provenance = "PPT conclusive: d1*d2 <= 6";
  } else {
    v.is_eb = Tristate::unknown;
    v.conclusive = false;
    v.provenance = "PPT inconclusive: d1*d2 > 6 and no certificate";
  }
  return v;
}

RankBounds rank_bounds(const Channel& ch, const Tolerance& tol) {
  const EBVerdict verdict = eb_verdict(ch, tol);
  if (verdict.is_eb != Tristate::yes) {
    throw Error(ErrorCode::NotEB, "rank bounds need a channel certified EB (" +
                                      verdict.provenance + ")");
  }
  const Index d2 = ch.d2();
  const Index ceiling = (ch.d1() * d2) * (ch.d1() * d2);
  RankBounds b;
  b.choi_rank = choi_rank(ch, tol);
  b.eb_rank_lower = b.choi_rank;
  b.eb_rank_upper = ceiling;
  if (verdict.certificate) {
    const KrausSet refined = holevo_to_kraus(*verdict.certificate, tol);
    const auto nonzero = std::count_if(refined.operators.begin(), refined.operators.end(),
                                       [](const CMatrix& v) { return max_abs(v) > 0.0; });
    b.eb_rank_upper = std::min<Index>(ceiling, std::max<Index>(nonzero, b.choi_rank));
  }
  if (b.choi_rank == d2 && predicates(ch, tol).is_unital) {
    b.eb_rank_lower = d2;
    b.eb_rank_upper = d2;
  }
  return b;
}

namespace {

constexpr int kMaxDraws = 10;
constexpr double kDistinctStates = 1.0 - 1e-6;

CMatrix inverse_sqrt_pd(const CMatrix& s, const Tolerance& tol) {
  const HermEig eig = herm_eig(s, tol);
  const RVector inv = eig.values.cwiseSqrt().cwiseInverse();
  return eig.vectors * inv.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

void require_dims(Index d1, Index d2) {
  if (d1 <= 0 || d2 <= 0) {
    throw Error(ErrorCode::InvalidArgument, "dimensions must be positive");
  }
}

}  // namespace

Channel random_unital_eb(SeededRng& rng, Index d1, Index d2, Index n_terms) {
  require_dims(d1, d2);
  if (n_terms <= 0) throw Error(ErrorCode::InvalidArgument, "n_terms must be positive");
  const Tolerance tol;
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    HolevoEnsemble h{d1, d2, {}};
    std::vector<CMatrix> a;
    CMatrix s = CMatrix::Zero(d2, d2);
    for (Index i = 0; i < n_terms; ++i) {
      const CVector u = rng.unit_vector(d1);
      const CMatrix g = rng.complex_gaussian(d2, d2);
      a.push_back(g * g.adjoint());
      s += a.back();
      h.terms.push_back({ket_bra(u, u), CMatrix()});
    }
    const RVector sv = singular_values(s);
    if (sv.minCoeff() <= 1e-8 * sv.maxCoeff()) continue;
    if (n_terms == 1) {
      h.terms[0].R = CMatrix::Identity(d2, d2);
    } else {
      const CMatrix s_inv_half = inverse_sqrt_pd(s, tol);
      for (Index i = 0; i < n_terms; ++i) {
        const CMatrix r = s_inv_half * a[i] * s_inv_half;
        h.terms[i].R = (r + r.adjoint()) * 0.5;
      }
    }
    return Channel(std::move(h), "random_unital_eb");
  }
  throw Error(ErrorCode::DegenerateDraw, "POVM normalizer numerically singular");
}

Channel random_cstar_extreme(SeededRng& rng, Index d1, Index d2, Index n_blocks) {
  require_dims(d1, d2);
  if (n_blocks < 1 || n_blocks > d2) {
    throw Error(ErrorCode::InvalidArgument, "n_blocks must lie in [1, d2]");
  }
  const CMatrix basis = rng.unitary(d2);
  std::vector<Index> sizes(static_cast<std::size_t>(n_blocks), 1);
  for (Index extra = 0; extra < d2 - n_blocks; ++extra) {
    ++sizes[static_cast<std::size_t>(rng.next_u64() % static_cast<std::uint64_t>(n_blocks))];
  }

  std::vector<CVector> states;
  for (Index b = 0; b < n_blocks; ++b) {
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      CVector u = rng.unit_vector(d1);
      const bool distinct = std::all_of(states.begin(), states.end(), [&](const CVector& w) {
        return std::abs(w.dot(u)) <= kDistinctStates;
      });
      if (distinct) {
        states.push_back(std::move(u));
        placed = true;
      }
    }
    if (!placed) {
      throw Error(ErrorCode::DegenerateDraw, "could not draw pairwise-distinct pure states");
    }
  }

  HolevoEnsemble h{d1, d2, {}};
  Index col = 0;
  for (Index b = 0; b < n_blocks; ++b) {
    const Index width = sizes[static_cast<std::size_t>(b)];
    const CMatrix q = basis.middleCols(col, width);
    col += width;
    const CVector& u = states[static_cast<std::size_t>(b)];
    h.terms.push_back({ket_bra(u, u), q * q.adjoint()});
  }
  return Channel(std::move(h), "random_cstar_extreme");
}

}  // namespace ebx
