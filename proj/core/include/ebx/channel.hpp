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

// Linear maps M_{d1} -> M_{d2} and their three interchangeable descriptions:
//
//   Kraus   X -> sum_i V_i^* X V_i,           V_i is d1 x d2
//   Choi    C = sum_ij E_ij ⊗ Phi(E_ij),      a d1 x d1 grid of d2 x d2 blocks
//   Holevo  X -> sum_i tr(X F_i) R_i,         F_i >= 0 (d1 x d1), R_i >= 0 (d2 x d2)
//
// A Holevo ensemble doubles as a certificate that the map breaks
// entanglement; the other two carry no such guarantee.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ebx/numkernel.hpp"

namespace ebx {

struct KrausSet {
  Index d1 = 0;
  Index d2 = 0;
  std::vector<CMatrix> operators;
};

struct ChoiMatrix {
  Index d1 = 0;
  Index d2 = 0;
  CMatrix matrix;
};

struct HolevoTerm {
  CMatrix F;
  CMatrix R;
};

struct HolevoEnsemble {
  Index d1 = 0;
  Index d2 = 0;
  std::vector<HolevoTerm> terms;
};

using Representation = std::variant<KrausSet, ChoiMatrix, HolevoEnsemble>;

/// An immutable linear map M_{d1} -> M_{d2}. Construction validates that
/// the representation is well formed (DimensionMismatch otherwise).
class Channel {
 public:
  explicit Channel(KrausSet kraus, std::string label = {});
  explicit Channel(ChoiMatrix choi, std::string label = {});
  explicit Channel(HolevoEnsemble holevo, std::string label = {});

  Index d1() const noexcept { return d1_; }
  Index d2() const noexcept { return d2_; }
  const std::string& label() const noexcept { return label_; }
  const Representation& representation() const noexcept { return rep_; }

  const KrausSet* kraus() const noexcept { return std::get_if<KrausSet>(&rep_); }
  const ChoiMatrix* choi() const noexcept { return std::get_if<ChoiMatrix>(&rep_); }
  const HolevoEnsemble* holevo() const noexcept {
    return std::get_if<HolevoEnsemble>(&rep_);
  }

  Channel with_label(std::string label) const;

 private:
  Index d1_ = 0;
  Index d2_ = 0;
  Representation rep_;
  std::string label_;
};

struct ChannelPredicates {
  bool is_cp = false;
  bool is_unital = false;
  bool is_tp = false;
  bool is_hermiticity_preserving = false;
};

/// Stinespring triple for pi(X) = X ⊗ I_r: Phi(X) = V^*(X ⊗ I_r)V, where
/// V z = sum_i (V_i z) ⊗ e_i. Minimal exactly when the Kraus operators it
/// was built from are linearly independent; minimality is not enforced.
struct StinespringTriple {
  Index dilation_dim = 0;
  CMatrix isometry;  // (d1 * r) x d2
};

struct FixedPointCheck {
  bool is_fixed = false;
  bool commutes_with_all_kraus = false;
  // Non-empty when the two booleans disagree.
  std::string diagnostic;
};

struct CommutantInfo {
  Index dim = 0;
  bool is_irreducible = false;
};

CMatrix apply(const Channel& ch, const CMatrix& x);

ChoiMatrix to_choi(const Channel& ch);

/// Kraus operators from the spectral decomposition of a PSD Choi matrix:
/// one operator per eigenvalue above the rank cutoff, with
/// V[i, k] = sqrt(lambda) * conj(w[i * d2 + k]). The zero map yields a
/// single zero operator.
KrausSet choi_to_kraus(const ChoiMatrix& c, const Tolerance& tol);

/// Rank-one Kraus operators sqrt(mu_k nu_l) |x_k><y_l| obtained by spectrally
/// refining every term. Vanishing F or R spectra are dropped.
KrausSet holevo_to_kraus(const HolevoEnsemble& h, const Tolerance& tol);

/// Kraus operators for any representation (converting as needed).
KrausSet kraus_of(const Channel& ch, const Tolerance& tol);

Channel adjoint(const Channel& ch);

ChannelPredicates predicates(const Channel& ch, const Tolerance& tol);

StinespringTriple stinespring(const Channel& ch, const Tolerance& tol);

FixedPointCheck fixed_point_check(const Channel& ch, const CMatrix& a,
                                  const Tolerance& tol);

CommutantInfo commutant_dimension(const Channel& ch, const Tolerance& tol);

/// Phi - Psi, carried as a Choi matrix.
Channel difference(const Channel& big, const Channel& small);

/// max_ij ||a(E_ij) - b(E_ij)||_max, i.e. the Choi distance.
double basis_distance(const Channel& a, const Channel& b);

/// (id ⊗ T)(C): every d2 x d2 block transposed in place.
CMatrix partial_transpose(const ChoiMatrix& c);

}  // namespace ebx
