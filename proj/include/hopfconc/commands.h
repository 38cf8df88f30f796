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

#ifndef HOPFCONC_COMMANDS_H
#define HOPFCONC_COMMANDS_H

#include <iosfwd>
#include <string>

namespace hopfconc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDiscrepancy = 2;

/// Largest disagreement between concurrence routes the CLI tolerates.
inline constexpr double kCliDiscrepancyTolerance = 1e-8;

/// Entry point of the command-line tool; subcommands concurrence, project,
/// evolve and verify. Returns the process exit status.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Fixed six-decimal rendering with negative zero folded to zero, so equal
/// results always print the same bytes.
std::string format_fixed6(double value);

}  // namespace hopfconc

#endif
