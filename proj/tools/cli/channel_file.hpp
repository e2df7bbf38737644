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

// ChannelFile codec. Complex entries are [re, im] pairs and matrices are
// row-major nested arrays:
//
//   {"d1": 2, "d2": 2, "label": "...",
//    "representation": {"kraus": [M, ...]} | {"choi": M} |
//                      {"holevo": [{"F": M, "R": M}, ...]}}

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ebx/channel.hpp"
#include "json.hpp"

namespace ebx::cli {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j, Index rows, Index cols, std::string_view where);

Json vector_to_json(const CVector& v);

Json channel_to_json(const Channel& ch);
Channel channel_from_json(const Json& j);

std::string serialize_channel(const Channel& ch);

/// Throws ParseError for malformed text and DimensionMismatch when the
/// matrices disagree with d1, d2.
Channel parse_channel(std::string_view text);

Channel load_channel(const std::filesystem::path& path);

void save_channel(const Channel& ch, const std::filesystem::path& path);

}  // namespace ebx::cli
