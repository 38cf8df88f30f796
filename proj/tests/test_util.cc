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

#include "test_util.h"

#include <algorithm>
#include <cmath>

namespace hopfconc::testing {

std::mt19937_64 test_rng(std::uint64_t salt) {
    return std::mt19937_64(0x5eed0000u + salt);
}

Quaternion random_quaternion(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    return {u(rng), u(rng), u(rng), u(rng)};
}

Octonion random_octonion(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    std::array<double, 8> x{};
    for (double &v : x) {
        v = u(rng);
    }
    return Octonion(x);
}

Quaternion random_integer_quaternion(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> u(-9, 9);
    return {double(u(rng)), double(u(rng)), double(u(rng)), double(u(rng))};
}

double max_abs_diff(const Quaternion &a, const Quaternion &b) {
    double d = 0;
    for (std::size_t i = 0; i < 4; i++) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

double max_abs_diff(const Octonion &a, const Octonion &b) {
    double d = 0;
    for (std::size_t i = 0; i < 8; i++) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            for (Eigen::Index k = 0; k < b.rows(); k++) {
                for (Eigen::Index l = 0; l < b.cols(); l++) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

}  // namespace hopfconc::testing
