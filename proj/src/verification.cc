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

#include "hopfconc/verification.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "hopfconc/concurrence_oracle.h"
#include "hopfconc/error.h"
#include "hopfconc/hopf_projection.h"
#include "hopfconc/quantum_state.h"

namespace hopfconc {

namespace {

constexpr std::array<std::size_t, 4> kRightDims{2, 3, 4, 8};

std::mt19937_64 suite_rng(std::uint64_t seed, std::uint64_t suite) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(suite)};
    return std::mt19937_64(seq);
}

std::size_t pick_right_dim(std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> pick(0, kRightDims.size() - 1);
    return kRightDims[pick(rng)];
}

Quaternion random_quaternion(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::array<double, 4> x{};
    for (double &v : x) {
        v = normal(rng);
    }
    return Quaternion(x);
}

Octonion random_octonion(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::array<double, 8> x{};
    for (double &v : x) {
        v = normal(rng);
    }
    return Octonion(x);
}

SuiteResult oracle_equivalence_2xn(std::mt19937_64 &rng, std::size_t trials) {
    SuiteResult r{"oracle_equivalence_2xN", trials, 0, 1e-12};
    for (std::size_t i = 0; i < trials; i++) {
        PureState s = random_state(rng, {2, pick_right_dim(rng)});
        double hopf = quat_concurrence(s);
        double minors = minor_concurrence(s, 2);
        double gens = generator_concurrence(s);
        r.worst = std::max({r.worst, std::abs(hopf - minors), std::abs(gens - minors), std::abs(hopf - gens)});
    }
    return r;
}

SuiteResult oracle_equivalence_4xn(std::mt19937_64 &rng, std::size_t trials) {
    SuiteResult r{"oracle_equivalence_4xN", trials, 0, 1e-10};
    for (std::size_t i = 0; i < trials; i++) {
        PureState s = random_state(rng, {4, pick_right_dim(rng)});
        r.worst = std::max(r.worst, std::abs(oct_concurrence(s) - minor_concurrence(s, 4)));
    }
    return r;
}

SuiteResult local_unitary_invariance(std::mt19937_64 &rng, std::size_t trials) {
    SuiteResult r{"local_unitary_invariance", trials, 0, 1e-10};
    for (std::size_t i = 0; i < trials; i++) {
        for (std::size_t left : {std::size_t{2}, std::size_t{4}}) {
            std::size_t right = pick_right_dim(rng);
            PureState s = random_state(rng, {left, right});
            PureState t = apply_local(s, random_unitary(left, rng), random_unitary(right, rng));
            double before = left == 2 ? quat_concurrence(s) : oct_concurrence(s);
            double after = left == 2 ? quat_concurrence(t) : oct_concurrence(t);
            r.worst = std::max(r.worst, std::abs(before - after));
        }
    }
    return r;
}

SuiteResult commuting_diagram(std::mt19937_64 &rng, std::size_t trials) {
    SuiteResult r{"commuting_diagram", trials, 0, 1e-10};
    for (std::size_t i = 0; i < trials; i++) {
        PureState s = random_state(rng, {2, 2});
        LocalUnitary2 a = random_local_unitary2(rng);
        LocalUnitary2 a_prime = random_local_unitary2(rng);
        r.worst = std::max(r.worst, equivariance_discrepancy(s, a, a_prime));
    }
    return r;
}

SuiteResult norm_composition(std::mt19937_64 &rng, std::size_t trials) {
    SuiteResult r{"norm_composition", trials, 0, 1e-12};
    for (std::size_t i = 0; i < trials; i++) {
        Quaternion p = random_quaternion(rng);
        Quaternion q = random_quaternion(rng);
        Octonion x = random_octonion(rng);
        Octonion y = random_octonion(rng);
        double dq = std::abs((p * q).norm() - p.norm() * q.norm());
        double dox = std::abs((x * y).norm() - x.norm() * y.norm());
        r.worst = std::max({r.worst, dq, dox});
    }
    return r;
}

}  // namespace

std::vector<SuiteResult> run_verification(std::uint64_t seed, std::size_t trials) {
    if (trials == 0) {
        throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
    }
    std::vector<SuiteResult> out;
    auto rng0 = suite_rng(seed, 0);
    out.push_back(oracle_equivalence_2xn(rng0, trials));
    auto rng1 = suite_rng(seed, 1);
    out.push_back(oracle_equivalence_4xn(rng1, trials));
    auto rng2 = suite_rng(seed, 2);
    out.push_back(local_unitary_invariance(rng2, trials));
    auto rng3 = suite_rng(seed, 3);
    out.push_back(commuting_diagram(rng3, trials));
    auto rng4 = suite_rng(seed, 4);
    out.push_back(norm_composition(rng4, trials));
    return out;
}

}  // namespace hopfconc
