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

#include "ebx/convex_decomp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ebx/error.hpp"
#include "ebx/extremality.hpp"

namespace ebx {
namespace {

constexpr double kNegligibleWeight = 1e-12;

CMatrix coefficient_gram(const CStarCombination& comb) {
  CMatrix sum = CMatrix::Zero(comb.d2, comb.d2);
  for (const auto& t : comb.terms) sum += t.T.adjoint() * t.T;
  return sum;
}

struct Piece {
  double weight;
  CVector vec;
};

std::vector<Piece> spectral_pieces(const CMatrix& m, const Tolerance& tol) {
  if (!is_psd(m, tol)) throw Error(ErrorCode::NotPSD, "certificate term is not PSD");
  const HermEig eig = herm_eig(m, tol);
  std::vector<Piece> out;
  if (eig.values.size() == 0 || !(eig.values(0) > 0.0)) return out;
  for (Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) > tol.rank_rel * eig.values(0)) out.push_back({eig.values(k), eig.vectors.col(k)});
  }
  return out;
}

}  // namespace

Channel evaluate(const CStarCombination& comb, const Tolerance& tol) {
  if (comb.terms.empty()) {
    throw Error(ErrorCode::InvalidArgument, "C*-convex combination has no terms");
  }
  for (const auto& t : comb.terms) {
    if (t.T.rows() != comb.d2 || t.T.cols() != comb.d2 || t.channel.d1() != comb.d1 ||
        t.channel.d2() != comb.d2) {
      throw Error(ErrorCode::DimensionMismatch, "term does not match the combination's dimensions");
    }
  }
  const double defect = max_abs(coefficient_gram(comb) - CMatrix::Identity(comb.d2, comb.d2));
  if (defect > tol.eq_abs) {
    std::ostringstream os;
    os << "||sum T_i^* T_i - I||_max = " << defect;
    throw Error(ErrorCode::CoefficientsNotNormalized, os.str());
  }
  for (const auto& t : comb.terms) {
    if (!predicates(t.channel, tol).is_unital) {
      throw Error(ErrorCode::NotUnital, "factor '" + t.channel.label() + "' is not unital");
    }
  }

  const bool all_holevo = std::all_of(comb.terms.begin(), comb.terms.end(),
                                      [](const CStarTerm& t) { return t.channel.holevo(); });
  if (all_holevo) {
    HolevoEnsemble h{comb.d1, comb.d2, {}};
    for (const auto& t : comb.terms) {
      for (const auto& term : t.channel.holevo()->terms) {
        h.terms.push_back({term.F, t.T.adjoint() * term.R * t.T});
      }
    }
    return Channel(std::move(h), "C*-convex combination");
  }
  KrausSet k{comb.d1, comb.d2, {}};
  for (const auto& t : comb.terms) {
    for (const auto& v : kraus_of(t.channel, tol).operators) k.operators.push_back(v * t.T);
  }
  return Channel(std::move(k), "C*-convex combination");
}

bool is_proper(const CStarCombination& comb, const Tolerance& tol) {
  return std::all_of(comb.terms.begin(), comb.terms.end(),
                     [&](const CStarTerm& t) { return svd_rank(t.T, tol) == comb.d2; });
}

CStarCombination km_decompose(const Channel& ch, const Tolerance& tol) {
  const HolevoEnsemble* cert = ch.holevo();
  if (cert == nullptr) {
    throw Error(ErrorCode::NoCertificate,
                "Krein-Milman decomposition needs a Holevo-form certificate");
  }
  if (!predicates(ch, tol).is_unital) throw Error(ErrorCode::NotUnital, "channel is not unital");
  const Index d1 = ch.d1();
  const Index d2 = ch.d2();

  CStarCombination out{d1, d2, {}};
  std::vector<double> weights;
  for (const auto& term : cert->terms) {
    const auto xs = spectral_pieces(term.F, tol);
    const auto ys = spectral_pieces(term.R, tol);
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        const double lambda = x.weight * y.weight;
        if (lambda < kNegligibleWeight) continue;
        HolevoEnsemble state{d1, d2, {{ket_bra(x.vec, x.vec), CMatrix::Identity(d2, d2)}}};
        out.terms.push_back({std::sqrt(lambda) * ket_bra(y.vec, y.vec),
                             Channel(std::move(state), "pure_state")});
        weights.push_back(lambda);
      }
    }
  }
  if (out.terms.empty()) throw Error(ErrorCode::NoCertificate, "certificate has no weight");

  const CMatrix defect = CMatrix::Identity(d2, d2) - coefficient_gram(out);
  if (max_abs(defect) > tol.eq_abs) {
    const auto big = std::max_element(weights.begin(), weights.end()) - weights.begin();
    CMatrix& t = out.terms[static_cast<std::size_t>(big)].T;
    t = psd_sqrt(t.adjoint() * t + defect, tol);
  }
  return out;
}

DecompositionCheck verify_decomposition(const CStarCombination& comb, const Channel& target,
                                        const Tolerance& tol) {
  DecompositionCheck out;
  out.reconstruction_error = basis_distance(evaluate(comb, tol), target);
  out.proper = is_proper(comb, tol);
  out.all_factors_extreme = true;
  for (std::size_t i = 0; i < comb.terms.size(); ++i) {
    const Channel& factor = comb.terms[i].channel;
    std::ostringstream os;
    os << "factor " << i;
    if (!factor.label().empty()) os << " (" << factor.label() << ")";
    try {
      if (!is_cstar_extreme(factor, tol).is_cstar_extreme) {
        out.all_factors_extreme = false;
        os << ": not C*-extreme";
        out.diagnostics.push_back(os.str());
      }
    } catch (const Error& e) {
      out.all_factors_extreme = false;
      os << ": " << e.what();
      out.diagnostics.push_back(os.str());
    }
  }
  return out;
}

}  // namespace ebx
