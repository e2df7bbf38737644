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

namespace ebx::cli {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> checks;  // "ok: ..." or "FAILED: ..."
};

const std::vector<std::string>& gallery_case_names();

/// Throws InvalidArgument for an unknown case name. Assertion failures and
/// library errors raised inside a case are recorded in the result.
CaseResult run_gallery_case(const std::string& name, const Tolerance& tol);

/// Channels shipped as example files, keyed by their labels.
std::vector<Channel> gallery_channels();

}  // namespace ebx::cli
