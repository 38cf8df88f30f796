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

#include "hopfconc/concurrence_oracle.h"

#include <cmath>

#include "hopfconc/error.h"

namespace hopfconc {

namespace {

int permutation_sign(const std::vector<std::size_t> &seq) {
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); i++) {
        for (std::size_t j = i + 1; j < seq.size(); j++) {
            if (seq[i] > seq[j]) {
                sign = -sign;
            }
        }
    }
    return sign;
}

// Lexicographic successor of an increasing r-subset of {0..n-1}.
bool next_combination(std::vector<std::size_t> &c, std::size_t n) {
    std::size_t r = c.size();
    for (std::size_t i = r; i-- > 0;) {
        if (c[i] < n - r + i) {
            c[i]++;
            for (std::size_t j = i + 1; j < r; j++) {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

template <typename Visit>
void for_each_minor(const Eigen::MatrixXcd &a, Visit visit) {
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = i + 1; j < a.rows(); j++) {
            for (Eigen::Index k = 0; k < a.cols(); k++) {
                for (Eigen::Index l = k + 1; l < a.cols(); l++) {
                    visit(a(i, k) * a(j, l) - a(i, l) * a(j, k));
                }
            }
        }
    }
}

}  // namespace

double minor_concurrence(const Eigen::MatrixXcd &amplitudes) {
    double sum = 0;
    for_each_minor(amplitudes, [&](Complex m) { sum += std::norm(m); });
    return 2 * std::sqrt(sum);
}

double minor_concurrence(const PureState &state, std::size_t left_dim) {
    return minor_concurrence(amplitude_matrix(state, left_dim));
}

double max_minor(const Eigen::MatrixXcd &amplitudes) {
    double best = 0;
    for_each_minor(amplitudes, [&](Complex m) { best = std::max(best, std::abs(m)); });
    return best;
}

std::vector<Eigen::MatrixXd> so_n_generators(std::size_t n) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "so(n) needs n >= 2");
    }
    std::vector<Eigen::MatrixXd> out;
    out.reserve(n * (n - 1) / 2);
    std::vector<std::size_t> omitted(n - 2);
    for (std::size_t i = 0; i < omitted.size(); i++) {
        omitted[i] = i;
    }
    do {
        std::vector<bool> used(n, false);
        for (std::size_t j : omitted) {
            used[j] = true;
        }
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < n; i++) {
            if (!used[i]) {
                free.push_back(i);
            }
        }
        std::size_t k = free[0];
        std::size_t l = free[1];
        std::vector<std::size_t> seq = omitted;
        seq.push_back(k);
        seq.push_back(l);
        double sign = permutation_sign(seq);

        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        g(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = sign;
        g(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(k)) = -sign;
        out.push_back(std::move(g));
    } while (next_combination(omitted, n));
    return out;
}

double generator_concurrence(const PureState &state) {
    Eigen::MatrixXcd psi = amplitude_matrix(state, 2);
    Eigen::Matrix2d s;
    s << 0, 1, -1, 0;
    Eigen::MatrixXcd psi_conj = psi.conjugate();
    Eigen::MatrixXcd left = s.cast<Complex>() * psi_conj;
    double sum = 0;
    for (const Eigen::MatrixXd &g : so_n_generators(static_cast<std::size_t>(psi.cols()))) {
        // (S (x) L) vec_r(Psi*) = vec_r(S Psi* L^T).
        Eigen::MatrixXcd tilde = left * g.transpose().cast<Complex>();
        Complex overlap = (psi.conjugate().array() * tilde.array()).sum();
        sum += std::norm(overlap);
    }
    return std::sqrt(sum);
}

}  // namespace hopfconc
