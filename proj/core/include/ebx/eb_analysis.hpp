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

#include <optional>
#include <string>
#include <string_view>

#include "ebx/channel.hpp"
#include "ebx/rng.hpp"

namespace ebx {

enum class Tristate { yes, no, unknown };

std::string_view to_string(Tristate t) noexcept;

// Separability of the Choi matrix is only decided numerically when a Holevo
// certificate is at hand or the PPT test is conclusive (d1 * d2 <= 6).
struct EBVerdict {
  bool ppt = false;
  bool conclusive = false;
  Tristate is_eb = Tristate::unknown;
  std::optional<HolevoEnsemble> certificate;
  std::string provenance;
};

struct RankBounds {
  Index choi_rank = 0;
  Index eb_rank_lower = 0;
  Index eb_rank_upper = 0;
};

Index choi_rank(const Channel& ch, const Tolerance& tol);

bool is_ppt(const Channel& ch, const Tolerance& tol);

/// Throws NotCP for maps that are not completely positive.
EBVerdict eb_verdict(const Channel& ch, const Tolerance& tol);

/// Throws NotEB unless eb_verdict says yes.
RankBounds rank_bounds(const Channel& ch, const Tolerance& tol);

/// Unital Holevo-form channel X -> sum_i <u_i, X u_i> R_i with Haar-like
/// unit vectors u_i and a random POVM R_i = S^{-1/2} A_i S^{-1/2}.
Channel random_unital_eb(SeededRng& rng, Index d1, Index d2, Index n_terms);

/// X -> sum_i <u_i, X u_i> P_i for distinct random pure states and a random
/// orthogonal resolution of the identity into n_blocks projections.
Channel random_cstar_extreme(SeededRng& rng, Index d1, Index d2, Index n_blocks);

}  // namespace ebx
