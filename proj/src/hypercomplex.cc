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

#include "hopfconc/hypercomplex.h"

#include <cmath>
#include <ostream>

#include "hopfconc/error.h"

namespace hopfconc {

namespace {

constexpr std::array<std::array<int, 3>, 7> kPositiveTriples{{
    {1, 2, 3},
    {1, 4, 5},
    {2, 4, 6},
    {3, 4, 7},
    {6, 1, 7},
    {7, 2, 5},
    {5, 3, 6},
}};

constexpr BasisTable8 build_octonion_table() {
    BasisTable8 table{};
    for (int i = 0; i < 8; i++) {
        table[0][i] = {1, i};
        table[i][0] = {1, i};
    }
    for (int i = 1; i < 8; i++) {
        table[i][i] = {-1, 0};
    }
    for (const auto &[a, b, c] : kPositiveTriples) {
        // Cyclic rotations are +1, transpositions -1.
        table[a][b] = {1, c};
        table[b][c] = {1, a};
        table[c][a] = {1, b};
        table[b][a] = {-1, c};
        table[c][b] = {-1, a};
        table[a][c] = {-1, b};
    }
    return table;
}

constexpr BasisTable8 kOctonionTable = build_octonion_table();

template <std::size_t N>
std::array<double, N> table_product(const std::array<double, N> &a, const std::array<double, N> &b) {
    std::array<double, N> r{};
    for (std::size_t i = 0; i < N; i++) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < N; j++) {
            const BasisProduct &p = kOctonionTable[i][j];
            r[p.index] += p.sign * a[i] * b[j];
        }
    }
    return r;
}

template <std::size_t N>
double sum_squares(const std::array<double, N> &x) {
    double s = 0;
    for (double v : x) {
        s += v * v;
    }
    return s;
}

}  // namespace

const BasisTable8 &octonion_basis_table() {
    return kOctonionTable;
}

// ---- Quaternion ----------------------------------------------------------

Quaternion Quaternion::from_complex(Complex z1, Complex z2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
}

Quaternion Quaternion::unit(std::size_t i) {
    if (i >= 4) {
        throw Error(ErrorKind::InvalidArgument, "quaternion basis index out of range");
    }
    std::array<double, 4> x{};
    x[i] = 1;
    return Quaternion(x);
}

double Quaternion::norm2() const {
    return sum_squares(x_);
}

double Quaternion::norm() const {
    return std::sqrt(norm2());
}

Quaternion &Quaternion::operator+=(const Quaternion &other) {
    for (std::size_t i = 0; i < 4; i++) {
        x_[i] += other.x_[i];
    }
    return *this;
}

Quaternion &Quaternion::operator-=(const Quaternion &other) {
    for (std::size_t i = 0; i < 4; i++) {
        x_[i] -= other.x_[i];
    }
    return *this;
}

Quaternion &Quaternion::operator*=(double s) {
    for (double &v : x_) {
        v *= s;
    }
    return *this;
}

Quaternion operator+(Quaternion a, const Quaternion &b) {
    return a += b;
}

Quaternion operator-(Quaternion a, const Quaternion &b) {
    return a -= b;
}

Quaternion operator-(const Quaternion &a) {
    return -1.0 * a;
}

Quaternion operator*(const Quaternion &a, const Quaternion &b) {
    return Quaternion(table_product(a.coefficients(), b.coefficients()));
}

Quaternion operator*(double s, Quaternion q) {
    return q *= s;
}

Quaternion operator*(Quaternion q, double s) {
    return q *= s;
}

Quaternion operator*(Complex z, const Quaternion &q) {
    return Quaternion::from_complex(z * q.z1(), z * q.z2());
}

Quaternion conj(const Quaternion &q) {
    return {q[0], -q[1], -q[2], -q[3]};
}

Quaternion star(const Quaternion &q) {
    return {q[0], q[1], -q[2], -q[3]};
}

Quaternion inverse(const Quaternion &q) {
    double n2 = q.norm2();
    if (n2 == 0) {
        throw Error(ErrorKind::DivisionByZero, "inverse of the zero quaternion");
    }
    return conj(q) * (1.0 / n2);
}

// ---- Octonion ------------------------------------------------------------

Octonion Octonion::from_complex(Complex z0, Complex z1, Complex z2, Complex z3) {
    return Octonion(std::array<double, 8>{
        z0.real(), z0.imag(), z1.real(), z1.imag(), z2.real(), z2.imag(), z3.real(), z3.imag()});
}

Octonion Octonion::from_quaternions(const Quaternion &lo, const Quaternion &hi) {
    // e_i e4 = e_{i+4} for i = 0..3, so hi e4 occupies the upper half verbatim.
    std::array<double, 8> x{};
    for (std::size_t i = 0; i < 4; i++) {
        x[i] = lo[i];
        x[i + 4] = hi[i];
    }
    return Octonion(x);
}

Octonion Octonion::unit(std::size_t i) {
    if (i >= 8) {
        throw Error(ErrorKind::InvalidArgument, "octonion basis index out of range");
    }
    std::array<double, 8> x{};
    x[i] = 1;
    return Octonion(x);
}

double Octonion::norm2() const {
    return sum_squares(x_);
}

double Octonion::norm() const {
    return std::sqrt(norm2());
}

Octonion &Octonion::operator+=(const Octonion &other) {
    for (std::size_t i = 0; i < 8; i++) {
        x_[i] += other.x_[i];
    }
    return *this;
}

Octonion &Octonion::operator-=(const Octonion &other) {
    for (std::size_t i = 0; i < 8; i++) {
        x_[i] -= other.x_[i];
    }
    return *this;
}

Octonion &Octonion::operator*=(double s) {
    for (double &v : x_) {
        v *= s;
    }
    return *this;
}

Octonion operator+(Octonion a, const Octonion &b) {
    return a += b;
}

Octonion operator-(Octonion a, const Octonion &b) {
    return a -= b;
}

Octonion operator-(const Octonion &a) {
    return -1.0 * a;
}

Octonion operator*(const Octonion &a, const Octonion &b) {
    return Octonion(table_product(a.coefficients(), b.coefficients()));
}

Octonion operator*(double s, Octonion o) {
    return o *= s;
}

Octonion operator*(Octonion o, double s) {
    return o *= s;
}

Octonion conj(const Octonion &o) {
    std::array<double, 8> x = o.coefficients();
    for (std::size_t i = 1; i < 8; i++) {
        x[i] = -x[i];
    }
    return Octonion(x);
}

Octonion inverse(const Octonion &o) {
    double n2 = o.norm2();
    if (n2 == 0) {
        throw Error(ErrorKind::DivisionByZero, "inverse of the zero octonion");
    }
    return conj(o) * (1.0 / n2);
}

std::ostream &operator<<(std::ostream &out, const Quaternion &q) {
    out << "(" << q[0];
    for (std::size_t i = 1; i < 4; i++) {
        out << ", " << q[i];
    }
    return out << ")";
}

std::ostream &operator<<(std::ostream &out, const Octonion &o) {
    out << "(" << o[0];
    for (std::size_t i = 1; i < 8; i++) {
        out << ", " << o[i];
    }
    return out << ")";
}

}  // namespace hopfconc
