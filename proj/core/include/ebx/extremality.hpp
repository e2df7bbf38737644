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

// C*-extreme points of unital entanglement-breaking maps.
//
// A unital EB map Phi: M_{d1} -> M_{d2} is C*-extreme exactly when its Choi
// rank equals d2, and then (and only then) it is a direct sum of pure states:
//
//   Phi(X) = sum_i <u_i, X u_i> P_i
//
// with pairwise-distinct unit vectors u_i and orthogonal projections P_i
// summing to the identity. That normal form is CanonicalEBForm. Maps CP-below
// a canonical Phi are exactly X -> Phi(X) R for a positive contraction R in
// the commutant of the range, which is what rn_derivative recovers.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ebx/channel.hpp"
#include "ebx/eb_analysis.hpp"
#include "ebx/rng.hpp"

namespace ebx {

struct CanonicalBlock {
  CVector u;  // unit vector in C^{d1}; phase-fixed
  CMatrix P;  // d2 x d2 orthogonal projection
};

struct CanonicalEBForm {
  Index d1 = 0;
  Index d2 = 0;
  std::vector<CanonicalBlock> blocks;

  /// X -> sum_i <u_i, X u_i> P_i as a Holevo-form channel.
  Channel to_channel(std::string label = {}) const;

  /// Throws StructureViolation if the normal-form invariants fail.
  void validate(const Tolerance& tol) const;
};

struct ExtremalityReport {
  Index choi_rank = 0;
  bool is_cstar_extreme = false;
  std::optional<CanonicalEBForm> canonical;
  std::optional<bool> is_cq_linear_extreme_in_ucp;  // only when d1 == d2
  bool is_irreducible = false;
  Index commutant_dim = 0;
};

struct RNDerivative {
  CMatrix R;
  std::vector<CMatrix> per_block;  // P_i R P_i, aligned with the canonical blocks
  double residual = 0.0;
};

struct ArvesonDerivative {
  CMatrix T;
  double residual = 0.0;
};

struct DominatedPiece {
  std::size_t block_index = 0;
  CMatrix R;
};

struct CqRemarkFlags {
  bool all_overlaps_nonzero = false;
};

struct UnitaryEquivalence {
  bool equivalent = false;
  std::optional<CMatrix> witness_unitary;
};

inline constexpr std::uint64_t kCanonicalSeed = 0x5eed'cafe'f00dULL;

CanonicalEBForm extract_canonical(const Channel& ch, const Tolerance& tol);
CanonicalEBForm extract_canonical(const Channel& ch, const Tolerance& tol, SeededRng& rng);

ExtremalityReport is_cstar_extreme(const Channel& ch, const Tolerance& tol);

CqRemarkFlags cq_remark_flags(const CanonicalEBForm& form, const Tolerance& tol = {});

bool dominates_cp(const Channel& big, const Channel& small, const Tolerance& tol);

/// EB verdict of big - small after a CP-domination check. When the PPT test
/// is inconclusive and big is C*-extreme, the difference is certified by
/// the Holevo ensemble of X -> sqrt(I - R) big(X) sqrt(I - R), R = small(I).
Tristate dominates_eb(const Channel& big, const Channel& small, const Tolerance& tol);

RNDerivative rn_derivative(const CanonicalEBForm& canonical, const Channel& psi,
                           const Tolerance& tol);

/// The rank-one map X -> <x, X x> |y><y|, carried as a Holevo term.
Channel rank_one_map(const CVector& x, const CVector& y);

DominatedPiece locate_dominated_rank_one(const CanonicalEBForm& canonical, const CVector& x,
                                         const CVector& y, const Tolerance& tol);

/// Coefficients T with Psi(X) = sum_ij t_ij V_i^* X V_j for Phi's Kraus
/// operators V_i, obtained as W^+ C_Psi (W^+)^* where W stacks the vectors
/// eta_i = sum_k e_k ⊗ (V_i^* e_k).
ArvesonDerivative arveson_derivative(const Channel& phi, const Channel& psi,
                                     const Tolerance& tol);

CMatrix extremality_witness(const CanonicalEBForm& canonical, const Channel& psi,
                            const Tolerance& tol);

UnitaryEquivalence unitary_equivalent(const CanonicalEBForm& a, const CanonicalEBForm& b,
                                      const Tolerance& tol);

}  // namespace ebx
