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

#include "hopfconc/quantum_state.h"

#include <cmath>
#include <string>

#include "hopfconc/error.h"

namespace hopfconc {

namespace {

std::size_t product(std::span<const std::size_t> dims) {
    std::size_t p = 1;
    for (std::size_t d : dims) {
        p *= d;
    }
    return p;
}

void check_dims(std::span<const std::size_t> dims) {
    if (dims.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "state needs at least one factor");
    }
    for (std::size_t d : dims) {
        if (d < 2) {
            throw Error(ErrorKind::DimensionMismatch, "factor dimension " + std::to_string(d) + " < 2");
        }
    }
}

Complex complex_normal(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    double re = normal(rng);
    double im = normal(rng);
    return {re, im};
}

std::vector<std::size_t> qubit_dims(std::size_t m) {
    return std::vector<std::size_t>(m, 2);
}

}  // namespace

double PureState::norm2() const {
    double s = 0;
    for (const Complex &a : amplitudes_) {
        s += std::norm(a);
    }
    return s;
}

PureState make_state(std::vector<std::size_t> dims, std::vector<Complex> amplitudes) {
    check_dims(dims);
    if (product(dims) != amplitudes.size()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "expected " + std::to_string(product(dims)) + " amplitudes, got " +
                        std::to_string(amplitudes.size()));
    }
    double n2 = 0;
    for (const Complex &a : amplitudes) {
        n2 += std::norm(a);
    }
    if (n2 == 0) {
        throw Error(ErrorKind::ZeroNorm, "all amplitudes are zero");
    }
    double n = std::sqrt(n2);
    if (!(std::abs(n - 1.0) <= kInputNormTolerance)) {
        throw Error(ErrorKind::NotNormalized, "state norm " + std::to_string(n) + " differs from 1");
    }
    for (Complex &a : amplitudes) {
        a /= n;
    }
    return PureState(std::move(dims), std::move(amplitudes));
}

PureState ghz(std::size_t m) {
    if (m < 2 || m > 30) {
        throw Error(ErrorKind::InvalidArgument, "GHZ state needs 2 <= m <= 30 qubits");
    }
    std::vector<Complex> amps(std::size_t{1} << m);
    amps.front() = M_SQRT1_2;
    amps.back() = M_SQRT1_2;
    return make_state(qubit_dims(m), std::move(amps));
}

PureState w(std::size_t m) {
    if (m < 2 || m > 30) {
        throw Error(ErrorKind::InvalidArgument, "W state needs 2 <= m <= 30 qubits");
    }
    std::vector<Complex> amps(std::size_t{1} << m);
    double c = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::size_t k = 0; k < m; k++) {
        amps[std::size_t{1} << k] = c;
    }
    return make_state(qubit_dims(m), std::move(amps));
}

PureState random_state(std::mt19937_64 &rng, std::vector<std::size_t> dims) {
    check_dims(dims);
    std::vector<Complex> amps(product(dims));
    double n2 = 0;
    for (Complex &a : amps) {
        a = complex_normal(rng);
        n2 += std::norm(a);
    }
    double n = std::sqrt(n2);
    for (Complex &a : amps) {
        a /= n;
    }
    return make_state(std::move(dims), std::move(amps));
}

PureState random_state(std::uint64_t seed, std::vector<std::size_t> dims) {
    std::mt19937_64 rng(seed);
    return random_state(rng, std::move(dims));
}

std::size_t encode_index(std::span<const std::size_t> dims, std::span<const std::size_t> labels) {
    if (dims.size() != labels.size()) {
        throw Error(ErrorKind::DimensionMismatch, "label count differs from factor count");
    }
    std::size_t index = 0;
    for (std::size_t k = 0; k < dims.size(); k++) {
        if (labels[k] >= dims[k]) {
            throw Error(ErrorKind::DimensionMismatch, "ket label out of range");
        }
        index = index * dims[k] + labels[k];
    }
    return index;
}

std::vector<std::size_t> decode_index(std::span<const std::size_t> dims, std::size_t index) {
    if (index >= product(dims)) {
        throw Error(ErrorKind::DimensionMismatch, "index out of range");
    }
    std::vector<std::size_t> labels(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        labels[k] = index % dims[k];
        index /= dims[k];
    }
    return labels;
}

std::size_t split_point(const PureState &state, std::size_t left_dim) {
    const auto &dims = state.dims();
    std::size_t prefix = 1;
    // Every remaining factor has dimension >= 2, so any proper prefix works.
    for (std::size_t k = 0; k + 1 < dims.size(); k++) {
        prefix *= dims[k];
        if (prefix == left_dim) {
            return k + 1;
        }
        if (prefix > left_dim) {
            break;
        }
    }
    throw Error(ErrorKind::SplitMismatch,
                "no proper prefix of the factors has dimension " + std::to_string(left_dim));
}

Eigen::MatrixXcd amplitude_matrix(const PureState &state, std::size_t left_dim) {
    split_point(state, left_dim);
    auto rows = static_cast<Eigen::Index>(left_dim);
    auto cols = static_cast<Eigen::Index>(state.size() / left_dim);
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; i++) {
        for (Eigen::Index j = 0; j < cols; j++) {
            m(i, j) = state[static_cast<std::size_t>(i * cols + j)];
        }
    }
    return m;
}

PureState state_from_matrix(std::vector<std::size_t> dims, const Eigen::MatrixXcd &matrix) {
    std::vector<Complex> amps(static_cast<std::size_t>(matrix.size()));
    for (Eigen::Index i = 0; i < matrix.rows(); i++) {
        for (Eigen::Index j = 0; j < matrix.cols(); j++) {
            amps[static_cast<std::size_t>(i * matrix.cols() + j)] = matrix(i, j);
        }
    }
    return make_state(std::move(dims), std::move(amps));
}

PureState apply_local(const PureState &state, const Eigen::MatrixXcd &u_left, const Eigen::MatrixXcd &u_right) {
    if (u_left.rows() != u_left.cols() || u_right.rows() != u_right.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "local operators must be square");
    }
    auto left_dim = static_cast<std::size_t>(u_left.rows());
    Eigen::MatrixXcd m;
    try {
        m = amplitude_matrix(state, left_dim);
    } catch (const Error &e) {
        throw Error(ErrorKind::DimensionMismatch, e.what());
    }
    if (u_right.rows() != m.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "right operator does not match the right factor");
    }
    // (A (x) B) vec_r(M) = vec_r(A M B^T) for row-major vectorization.
    Eigen::MatrixXcd out = u_left * m * u_right.transpose();
    return state_from_matrix(state.dims(), out);
}

Eigen::Matrix2cd LocalUnitary2::matrix() const {
    Eigen::Matrix2cd u;
    u << a, b, -std::conj(b), std::conj(a);
    return u;
}

LocalUnitary2 make_local_unitary2(Complex a, Complex b) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
        throw Error(ErrorKind::InvalidArgument, "|a|^2 + |b|^2 must equal 1");
    }
    return {a, b};
}

LocalUnitary2 random_local_unitary2(std::mt19937_64 &rng) {
    Complex a = complex_normal(rng);
    Complex b = complex_normal(rng);
    double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
}

Eigen::MatrixXcd random_unitary(std::size_t n, std::mt19937_64 &rng) {
    auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = 0; j < dim; j++) {
            g(i, j) = complex_normal(rng);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
}

}  // namespace hopfconc
