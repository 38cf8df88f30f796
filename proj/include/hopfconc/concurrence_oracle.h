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

#ifndef HOPFCONC_CONCURRENCE_ORACLE_H
#define HOPFCONC_CONCURRENCE_ORACLE_H

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "hopfconc/quantum_state.h"

namespace hopfconc {

/// 2 sqrt(sum_{i<j} sum_{k<l} |a_ik a_jl - a_il a_jk|^2) over the 2 x 2
/// minors of an N1 x N2 coefficient matrix.
double minor_concurrence(const Eigen::MatrixXcd &amplitudes);
/// Same, for the contiguous-prefix split with a left factor of dimension
/// left_dim. Throws SplitMismatch.
double minor_concurrence(const PureState &state, std::size_t left_dim);

/// Largest modulus among the 2 x 2 minors; zero exactly for rank one.
double max_minor(const Eigen::MatrixXcd &amplitudes);

/// The n(n-1)/2 generators of so(n). Generator number alpha is labelled by
/// the alpha-th (n-2)-subset J of {0..n-1} in lexicographic order and has
/// entries (L_J)_kl = epsilon_{J k l}. Throws InvalidArgument for n < 2.
std::vector<Eigen::MatrixXd> so_n_generators(std::size_t n);

/// sqrt(sum_alpha |<psi| (S (x) L_alpha) |psi*>|^2) with S = i sigma_2 and
/// psi* the componentwise conjugate in the stored basis. Throws
/// SplitMismatch unless the first factor has dimension 2.
double generator_concurrence(const PureState &state);

}  // namespace hopfconc

#endif
