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

#ifndef HOPFCONC_HYPERCOMPLEX_H
#define HOPFCONC_HYPERCOMPLEX_H

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>

namespace hopfconc {

using Complex = std::complex<double>;

/// e_i * e_j = sign * e_index.
struct BasisProduct {
    int sign;
    int index;

    friend constexpr bool operator==(const BasisProduct &, const BasisProduct &) = default;
};

using BasisTable8 = std::array<std::array<BasisProduct, 8>, 8>;

/// Octonion unit products generated from the totally antisymmetric structure
/// constants with f_ijk = +1 on 123, 145, 246, 347, 617, 725, 536. The
/// quaternion table is the upper-left 4x4 block.
const BasisTable8 &octonion_basis_table();

/// Real quaternion x0 + x1 e1 + x2 e2 + x3 e3. The complex unit is e1, so
/// a quaternion splits as z1 + z2 e2 with z1 = x0 + x1 i and z2 = x2 + x3 i.
class Quaternion {
   public:
    constexpr Quaternion() = default;
    constexpr Quaternion(double x0, double x1, double x2, double x3) : x_{x0, x1, x2, x3} {
    }
    constexpr explicit Quaternion(const std::array<double, 4> &x) : x_(x) {
    }

    static Quaternion from_complex(Complex z1, Complex z2 = {});
    static Quaternion unit(std::size_t i);

    double operator[](std::size_t i) const {
        return x_[i];
    }
    const std::array<double, 4> &coefficients() const {
        return x_;
    }

    Complex z1() const {
        return {x_[0], x_[1]};
    }
    Complex z2() const {
        return {x_[2], x_[3]};
    }

    double norm2() const;
    double norm() const;

    Quaternion &operator+=(const Quaternion &other);
    Quaternion &operator-=(const Quaternion &other);
    Quaternion &operator*=(double s);

    friend bool operator==(const Quaternion &, const Quaternion &) = default;

   private:
    std::array<double, 4> x_{};
};

Quaternion operator+(Quaternion a, const Quaternion &b);
Quaternion operator-(Quaternion a, const Quaternion &b);
Quaternion operator-(const Quaternion &a);
Quaternion operator*(const Quaternion &a, const Quaternion &b);
Quaternion operator*(double s, Quaternion q);
Quaternion operator*(Quaternion q, double s);
/// Left multiplication by a complex number embedded as x0 + x1 e1.
Quaternion operator*(Complex z, const Quaternion &q);

/// x0 - x1 e1 - x2 e2 - x3 e3, equal to conj(z1) - z2 e2.
Quaternion conj(const Quaternion &q);
/// z1 + z2 e2 -> z1 - z2 e2. Fixes the complex subalgebra.
Quaternion star(const Quaternion &q);
Quaternion inverse(const Quaternion &q);

/// Real octonion x0 + x1 e1 + ... + x7 e7, split into complex parts as
/// z0 + z1 e2 + (z2 + z3 e2) e4 with z_k = x_{2k} + x_{2k+1} i.
class Octonion {
   public:
    constexpr Octonion() = default;
    constexpr explicit Octonion(const std::array<double, 8> &x) : x_(x) {
    }

    static Octonion from_complex(Complex z0, Complex z1 = {}, Complex z2 = {}, Complex z3 = {});
    /// lo + hi e4.
    static Octonion from_quaternions(const Quaternion &lo, const Quaternion &hi);
    static Octonion unit(std::size_t i);

    double operator[](std::size_t i) const {
        return x_[i];
    }
    const std::array<double, 8> &coefficients() const {
        return x_;
    }

    /// Complex part k in 0..3 of the split above.
    Complex part(std::size_t k) const {
        return {x_[2 * k], x_[2 * k + 1]};
    }

    double norm2() const;
    double norm() const;

    Octonion &operator+=(const Octonion &other);
    Octonion &operator-=(const Octonion &other);
    Octonion &operator*=(double s);

    friend bool operator==(const Octonion &, const Octonion &) = default;

   private:
    std::array<double, 8> x_{};
};

Octonion operator+(Octonion a, const Octonion &b);
Octonion operator-(Octonion a, const Octonion &b);
Octonion operator-(const Octonion &a);
/// Not associative: keep the parentheses.
Octonion operator*(const Octonion &a, const Octonion &b);
Octonion operator*(double s, Octonion o);
Octonion operator*(Octonion o, double s);

Octonion conj(const Octonion &o);
/// conj(o) / |o|^2; throws Error(DivisionByZero) for o == 0.
Octonion inverse(const Octonion &o);

std::ostream &operator<<(std::ostream &out, const Quaternion &q);
std::ostream &operator<<(std::ostream &out, const Octonion &o);

}  // namespace hopfconc

#endif
