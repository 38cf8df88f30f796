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

#ifndef HOPFCONC_QUANTUM_STATE_H
#define HOPFCONC_QUANTUM_STATE_H

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hopfconc/hypercomplex.h"

namespace hopfconc {

/// Normalization tolerance accepted on input before exact renormalization.
inline constexpr double kInputNormTolerance = 1e-6;

/// Normalized pure state over an ordered list of tensor factors. Amplitudes
/// are indexed row-major over the ket labels: for dims [2, 2, 2] the ket
/// |ijk> sits at 4i + 2j + k.
class PureState {
   public:
    const std::vector<std::size_t> &dims() const {
        return dims_;
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    std::size_t size() const {
        return amplitudes_.size();
    }
    Complex operator[](std::size_t i) const {
        return amplitudes_[i];
    }
    double norm2() const;

   private:
    friend PureState make_state(std::vector<std::size_t> dims, std::vector<Complex> amplitudes);
    PureState(std::vector<std::size_t> dims, std::vector<Complex> amplitudes)
        : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    }

    std::vector<std::size_t> dims_;
    std::vector<Complex> amplitudes_;
};

/// Validates lengths and normalization (within kInputNormTolerance) and
/// renormalizes. Throws DimensionMismatch, ZeroNorm or NotNormalized.
PureState make_state(std::vector<std::size_t> dims, std::vector<Complex> amplitudes);

/// (|0...0> + |1...1>) / sqrt(2) on m qubits, m >= 2.
PureState ghz(std::size_t m);
/// Equal superposition of the m single-excitation kets, m >= 2.
PureState w(std::size_t m);

/// Complex-normal components, normalized. Deterministic per seed.
PureState random_state(std::uint64_t seed, std::vector<std::size_t> dims);
PureState random_state(std::mt19937_64 &rng, std::vector<std::size_t> dims);

std::size_t encode_index(std::span<const std::size_t> dims, std::span<const std::size_t> labels);
std::vector<std::size_t> decode_index(std::span<const std::size_t> dims, std::size_t index);

/// Number of leading factors whose dimensions multiply to left_dim, with at
/// least one factor remaining and a right part of dimension >= 2. Throws
/// SplitMismatch otherwise.
std::size_t split_point(const PureState &state, std::size_t left_dim);

/// The left_dim x (size / left_dim) coefficient matrix a_ij of the
/// contiguous-prefix bipartition.
Eigen::MatrixXcd amplitude_matrix(const PureState &state, std::size_t left_dim);

/// Inverse of amplitude_matrix; the matrix must be normalized.
PureState state_from_matrix(std::vector<std::size_t> dims, const Eigen::MatrixXcd &matrix);

/// |psi'> = (U_left (x) U_right) |psi>, the left factor being the prefix of
/// dimension U_left.rows(). Throws DimensionMismatch for non-square or
/// mismatched operators.
PureState apply_local(const PureState &state, const Eigen::MatrixXcd &u_left, const Eigen::MatrixXcd &u_right);

/// [[a, b], [-conj(b), conj(a)]] with |a|^2 + |b|^2 = 1.
struct LocalUnitary2 {
    Complex a{1.0};
    Complex b{};

    Eigen::Matrix2cd matrix() const;
};

/// Throws InvalidArgument unless |a|^2 + |b|^2 = 1 within 1e-12.
LocalUnitary2 make_local_unitary2(Complex a, Complex b);
LocalUnitary2 random_local_unitary2(std::mt19937_64 &rng);

/// Unitary from the QR factorization of a complex Gaussian matrix.
Eigen::MatrixXcd random_unitary(std::size_t n, std::mt19937_64 &rng);

}  // namespace hopfconc

#endif
