// Copyright 2026 The hopfconc Authors
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

#ifndef HOPFCONC_STATE_IO_H
#define HOPFCONC_STATE_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "hopfconc/quantum_state.h"

namespace hopfconc {

/// Parses {"dims": [...], "amplitudes": [[re, im], ...]} with amplitudes in
/// index order. Throws Parse for malformed documents and the make_state
/// errors for inconsistent or non-normalized content.
PureState parse_state_json(std::string_view text);
PureState load_state_file(const std::filesystem::path &path);

/// Serializes with full double precision; parse_state_json round-trips it.
std::string state_to_json(const PureState &state);

}  // namespace hopfconc

#endif
