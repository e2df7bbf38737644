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

// Named channels used by the worked examples, the CLI gallery and the tests.
// Every builder returns exact small-rational data so serialized copies
// reproduce bit-for-bit.

#pragma once

#include "ebx/channel.hpp"
#include "ebx/convex_decomp.hpp"

namespace ebx::gallery {

/// X -> x11 E11 + x22 E22 on M_2 (Kraus E11, E22).
Channel diag_m2();

/// X -> x22 E11 + x11 E22, the row-swapped variant of diag_m2.
Channel diag_m2_swapped();

/// X -> 3/4 sum_i <v_i, X v_i> |v_i><v_i| over the four tetrahedral
/// vectors (±1, ±1, ±1) / sqrt(3) carrying an even number of minus signs.
Channel tetrahedral_m3();

/// X -> tr(X) I / d as the Holevo ensemble {(E_ii, E_jj / d)}.
Channel depolarizing(Index d);

/// X -> tr(X) I / 2 on M_2 with the single Holevo term (I / 2, I).
Channel normalized_trace_m2();

/// X -> x11 (E11 + E22) + x33 E33 on M_3.
Channel block_state_m3();

/// X -> x11 (t ⊕ 0) + x33 t33 E33 for a 2 x 2 contraction t.
Channel block_state_m3_scaled(const CMatrix& t, double t33);

/// X -> 1/4 [[x11 + x22, x12], [x21, x11 + x22]] on M_2 (Choi form).
Channel quarter_trace_plus_identity();

/// X -> (tr(X) I + c X) / (d + c) and X -> tr(X) I / (d + c) on M_d.
Channel trace_plus_identity(Index d, double c);
Channel scaled_trace(Index d, double c);

/// Ad_V for V = diag(1, -1) on M_2.
Channel sign_flip_m2();

/// 1/2 (id + Ad_V) as a C*-convex combination with T = I / sqrt(2).
CStarCombination diag_m2_ucp_split();

}  // namespace ebx::gallery
