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

#ifndef HOPFCONC_VERIFICATION_H
#define HOPFCONC_VERIFICATION_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hopfconc {

struct SuiteResult {
    std::string name;
    std::size_t trials = 0;
    double worst = 0;
    double tolerance = 0;

    bool passed() const {
        return worst <= tolerance;
    }
};

/// Randomized invariant suites: oracle equivalence on both splits,
/// local-unitary invariance, the projection/module commuting square and
/// norm composition. Each suite draws from its own generator seeded by
/// (seed, suite index), so reports are reproducible. trials must be >= 1.
std::vector<SuiteResult> run_verification(std::uint64_t seed, std::size_t trials);

}  // namespace hopfconc

#endif
