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

#ifndef HOPFCONC_HOPF_PROJECTION_H
#define HOPFCONC_HOPF_PROJECTION_H

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "hopfconc/hypercomplex.h"
#include "hopfconc/quantum_state.h"

namespace hopfconc {

struct QuaterState {
    std::vector<Quaternion> coefficients;

    double norm2() const;
};

struct OctoState {
    std::vector<Octonion> coefficients;

    double norm2() const;
};

/// q_j conj(q_k) = schmidt + concurrence_part e2.
struct QuatProjection {
    Complex schmidt;
    Complex concurrence_part;

    Quaternion quaternion() const {
        return Quaternion::from_complex(schmidt, concurrence_part);
    }
};

/// o_k conj(o_l) = s0 + s1 e2 + (s2 + s3 e2) e4. s0 is the Schmidt part;
/// s1..s3 carry the entanglement.
struct OctProjection {
    Complex s0;
    Complex s1;
    Complex s2;
    Complex s3;

    Octonion octonion() const {
        return Octonion::from_complex(s0, s1, s2, s3);
    }
    double hypercomplex_norm2() const;
};

struct QuatPairProjection {
    std::size_t j;
    std::size_t k;
    QuatProjection projection;
};

struct OctPairProjection {
    std::size_t k;
    std::size_t l;
    OctProjection projection;
};

/// 2 (x) N packing: |0 j> -> |j>_q, |1 j> -> e2 |j>_q, i.e.
/// q_j = a_0j + a_1j e2 over the columns of the 2 x N amplitude matrix.
/// Throws SplitMismatch when the state has no leading factor of dimension 2.
QuaterState quaternify(const PureState &state);

/// Two-qubit packing q_i = a_i0 + a_i1 e2: the first qubit indexes the
/// coefficients and the second qubit lives inside each quaternion. This is
/// the form on which a local pair A (x) A' acts as A q (a' - conj(b') e2).
/// Requires dims [2, 2] (SplitMismatch otherwise).
QuaterState quaterbit(const PureState &state);

/// 4 (x) N packing o_j = (a_0j + a_1j e2) + (a_2j + conj(a_3j) e2) e4.
/// Throws SplitMismatch when the leading factors do not multiply to 4.
OctoState octonify(const PureState &state);

QuatProjection quat_project(const Quaternion &qj, const Quaternion &qk);
OctProjection oct_project(const Octonion &ok, const Octonion &ol);

/// All pairs j < k in lexicographic order.
std::vector<QuatPairProjection> quat_projections(const QuaterState &qstate);
std::vector<OctPairProjection> oct_projections(const OctoState &ostate);

/// 2 sqrt(sum_{j<k} |C_jk|^2).
double quat_concurrence(const QuaterState &qstate);
double quat_concurrence(const PureState &state);

/// 2 sqrt(sum_{k<l} (|s1|^2 + |s2|^2 + |s3|^2)).
double oct_concurrence(const OctoState &ostate);
double oct_concurrence(const PureState &state);

/// Entries 2 C_jk for j < k; its Euclidean norm is the concurrence.
std::vector<Complex> quat_concurrence_vector(const QuaterState &qstate);

/// Left matrix action of A on (q0, q1) and right multiplication of every
/// coefficient by a' - conj(b') e2. Throws LengthMismatch unless the state
/// has exactly two coefficients.
QuaterState right_module_action(const QuaterState &qstate, const LocalUnitary2 &a, const LocalUnitary2 &a_prime);

/// Largest component difference between the projection of the transformed
/// state and the projection of the transformed quaterbit.
double equivariance_discrepancy(const PureState &state, const LocalUnitary2 &a, const LocalUnitary2 &a_prime);
bool verify_equivariance(const PureState &state, const LocalUnitary2 &a, const LocalUnitary2 &a_prime,
                         double tolerance = 1e-10);

/// Schmidt part after A (x) I in closed form:
/// (|q1|^2 - |q0|^2) a b + a^2 S - b^2 conj(S).
Complex schmidt_after_left_unitary(const QuaterState &qstate, const LocalUnitary2 &a);

/// Polynomial form of o_k conj(o_l) written in the amplitudes of columns k
/// and l of the 4 x N matrix. Kept separate from oct_project so the two can
/// be checked against each other.
OctProjection pair_projection_polynomial(const Eigen::MatrixXcd &amplitudes, std::size_t k, std::size_t l);

/// Polynomial form of o_0 conj(o_1) for a three-qubit state t_0..t_7 split
/// as (12)|3.
OctProjection three_qubit_projection_polynomial(std::span<const Complex, 8> t);

}  // namespace hopfconc

#endif
