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
#include <vector>

#include "cli/channel_file.hpp"
#include "ebx/eb_analysis.hpp"
#include "ebx/extremality.hpp"

namespace ebx::cli {

inline constexpr const char* kToolName = "ebx";
inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisReport {
  Index d1 = 0;
  Index d2 = 0;
  std::string label;
  std::string representation;
  ChannelPredicates predicates;
  bool ppt = false;
  std::optional<EBVerdict> eb;
  Index choi_rank = 0;
  std::optional<RankBounds> rank_bounds;
  std::optional<ExtremalityReport> extremality;
  CommutantInfo commutant;
  std::vector<std::string> notes;
};

/// Runs every applicable analysis. Inapplicable stages (for example
/// extremality of a non-unital map) are skipped with a note instead of
/// failing.
AnalysisReport analyze(const Channel& ch, const Tolerance& tol);

Json tolerance_to_json(const Tolerance& tol);
Json canonical_to_json(const CanonicalEBForm& form);
Json report_to_json(const AnalysisReport& r, const Tolerance& tol);
std::string report_to_text(const AnalysisReport& r, const Tolerance& tol);

/// {"tool": ..., "version": ..., "tolerance": ...} header shared by every
/// JSON document the tool emits.
Json document_header(const Tolerance& tol);

}  // namespace ebx::cli
