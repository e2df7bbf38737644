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

#pragma once

#include <string>
#include <vector>

#include "ebx/channel.hpp"

namespace ebx {

struct CStarTerm {
  CMatrix T;  // d2 x d2 coefficient
  Channel channel;
};

/// sum_i Ad_{T_i} o Phi_i with sum_i T_i^* T_i = I.
struct CStarCombination {
  Index d1 = 0;
  Index d2 = 0;
  std::vector<CStarTerm> terms;
};

struct DecompositionCheck {
  double reconstruction_error = 0.0;
  bool all_factors_extreme = false;
  bool proper = false;
  std::vector<std::string> diagnostics;
};

/// Throws CoefficientsNotNormalized or NotUnital when the combination's
/// invariants fail. Holevo factors stay in Holevo form (terms
/// (F, T^* R T)); anything else is assembled from Kraus operators V T.
Channel evaluate(const CStarCombination& comb, const Tolerance& tol = {});

bool is_proper(const CStarCombination& comb, const Tolerance& tol);

/// Krein-Milman decomposition of a unital Holevo-certified channel into
/// pure-state factors X -> <u_i, X u_i> I with rank-one coefficients
/// sqrt(lambda_i) |v_i><v_i|.
CStarCombination km_decompose(const Channel& ch, const Tolerance& tol);

DecompositionCheck verify_decomposition(const CStarCombination& comb, const Channel& target,
                                        const Tolerance& tol);

}  // namespace ebx
