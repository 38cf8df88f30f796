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

#include "hopfconc/hopf_projection.h"

#include <algorithm>
#include <cmath>

#include "hopfconc/error.h"

namespace hopfconc {

namespace {

Complex at(const Eigen::MatrixXcd &m, std::size_t row, std::size_t col) {
    return m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

double max_component_diff(const QuatProjection &x, const QuatProjection &y) {
    return std::max(std::abs(x.schmidt - y.schmidt), std::abs(x.concurrence_part - y.concurrence_part));
}

}  // namespace

double QuaterState::norm2() const {
    double s = 0;
    for (const Quaternion &q : coefficients) {
        s += q.norm2();
    }
    return s;
}

double OctoState::norm2() const {
    double s = 0;
    for (const Octonion &o : coefficients) {
        s += o.norm2();
    }
    return s;
}

double OctProjection::hypercomplex_norm2() const {
    return std::norm(s1) + std::norm(s2) + std::norm(s3);
}

QuaterState quaternify(const PureState &state) {
    Eigen::MatrixXcd a = amplitude_matrix(state, 2);
    QuaterState out;
    out.coefficients.reserve(static_cast<std::size_t>(a.cols()));
    for (Eigen::Index j = 0; j < a.cols(); j++) {
        out.coefficients.push_back(Quaternion::from_complex(a(0, j), a(1, j)));
    }
    return out;
}

QuaterState quaterbit(const PureState &state) {
    if (state.dims() != std::vector<std::size_t>{2, 2}) {
        throw Error(ErrorKind::SplitMismatch, "quaterbit form needs a two-qubit state");
    }
    return {{Quaternion::from_complex(state[0], state[1]), Quaternion::from_complex(state[2], state[3])}};
}

OctoState octonify(const PureState &state) {
    Eigen::MatrixXcd a = amplitude_matrix(state, 4);
    OctoState out;
    out.coefficients.reserve(static_cast<std::size_t>(a.cols()));
    for (Eigen::Index j = 0; j < a.cols(); j++) {
        out.coefficients.push_back(Octonion::from_complex(a(0, j), a(1, j), a(2, j), std::conj(a(3, j))));
    }
    return out;
}

QuatProjection quat_project(const Quaternion &qj, const Quaternion &qk) {
    Quaternion p = qj * conj(qk);
    return {p.z1(), p.z2()};
}

OctProjection oct_project(const Octonion &ok, const Octonion &ol) {
    Octonion p = ok * conj(ol);
    return {p.part(0), p.part(1), p.part(2), p.part(3)};
}

std::vector<QuatPairProjection> quat_projections(const QuaterState &qstate) {
    const auto &q = qstate.coefficients;
    std::vector<QuatPairProjection> out;
    for (std::size_t j = 0; j < q.size(); j++) {
        for (std::size_t k = j + 1; k < q.size(); k++) {
            out.push_back({j, k, quat_project(q[j], q[k])});
        }
    }
    return out;
}

std::vector<OctPairProjection> oct_projections(const OctoState &ostate) {
    const auto &o = ostate.coefficients;
    std::vector<OctPairProjection> out;
    for (std::size_t k = 0; k < o.size(); k++) {
        for (std::size_t l = k + 1; l < o.size(); l++) {
            out.push_back({k, l, oct_project(o[k], o[l])});
        }
    }
    return out;
}

double quat_concurrence(const QuaterState &qstate) {
    const auto &q = qstate.coefficients;
    double sum = 0;
    for (std::size_t j = 0; j < q.size(); j++) {
        for (std::size_t k = j + 1; k < q.size(); k++) {
            sum += std::norm(quat_project(q[j], q[k]).concurrence_part);
        }
    }
    return 2 * std::sqrt(sum);
}

double quat_concurrence(const PureState &state) {
    return quat_concurrence(quaternify(state));
}

double oct_concurrence(const OctoState &ostate) {
    const auto &o = ostate.coefficients;
    double sum = 0;
    for (std::size_t k = 0; k < o.size(); k++) {
        for (std::size_t l = k + 1; l < o.size(); l++) {
            sum += oct_project(o[k], o[l]).hypercomplex_norm2();
        }
    }
    return 2 * std::sqrt(sum);
}

double oct_concurrence(const PureState &state) {
    return oct_concurrence(octonify(state));
}

std::vector<Complex> quat_concurrence_vector(const QuaterState &qstate) {
    std::vector<Complex> out;
    for (const QuatPairProjection &p : quat_projections(qstate)) {
        out.push_back(2.0 * p.projection.concurrence_part);
    }
    return out;
}

QuaterState right_module_action(const QuaterState &qstate, const LocalUnitary2 &a, const LocalUnitary2 &a_prime) {
    if (qstate.coefficients.size() != 2) {
        throw Error(ErrorKind::LengthMismatch, "right module action needs exactly two coefficients");
    }
    const Quaternion right = Quaternion::from_complex(a_prime.a, -std::conj(a_prime.b));
    const Quaternion q0 = qstate.coefficients[0] * right;
    const Quaternion q1 = qstate.coefficients[1] * right;
    return {{a.a * q0 + a.b * q1, -std::conj(a.b) * q0 + std::conj(a.a) * q1}};
}

double equivariance_discrepancy(const PureState &state, const LocalUnitary2 &a, const LocalUnitary2 &a_prime) {
    QuaterState via_state = quaterbit(apply_local(state, a.matrix(), a_prime.matrix()));
    QuaterState via_module = right_module_action(quaterbit(state), a, a_prime);
    return max_component_diff(quat_project(via_state.coefficients[0], via_state.coefficients[1]),
                              quat_project(via_module.coefficients[0], via_module.coefficients[1]));
}

bool verify_equivariance(const PureState &state, const LocalUnitary2 &a, const LocalUnitary2 &a_prime,
                         double tolerance) {
    return equivariance_discrepancy(state, a, a_prime) <= tolerance;
}

Complex schmidt_after_left_unitary(const QuaterState &qstate, const LocalUnitary2 &a) {
    if (qstate.coefficients.size() != 2) {
        throw Error(ErrorKind::LengthMismatch, "closed-form Schmidt term needs exactly two coefficients");
    }
    const Quaternion &q0 = qstate.coefficients[0];
    const Quaternion &q1 = qstate.coefficients[1];
    Complex s = quat_project(q0, q1).schmidt;
    return (q1.norm2() - q0.norm2()) * a.a * a.b + a.a * a.a * s - a.b * a.b * std::conj(s);
}

OctProjection pair_projection_polynomial(const Eigen::MatrixXcd &amplitudes, std::size_t k, std::size_t l) {
    if (amplitudes.rows() != 4) {
        throw Error(ErrorKind::SplitMismatch, "pair polynomial needs a 4 x N amplitude matrix");
    }
    auto n = static_cast<std::size_t>(amplitudes.cols());
    if (k >= n || l >= n) {
        throw Error(ErrorKind::InvalidArgument, "column index out of range");
    }
    // x(c, r) is the amplitude of row r in column c.
    auto x = [&](std::size_t col, std::size_t row) { return at(amplitudes, row, col); };
    auto cj = [](Complex z) { return std::conj(z); };
    OctProjection p;
    p.s0 = x(k, 0) * cj(x(l, 0)) + x(k, 1) * cj(x(l, 1)) + x(k, 2) * cj(x(l, 2)) + x(k, 3) * cj(x(l, 3));
    p.s1 = x(k, 1) * x(l, 0) - x(k, 0) * x(l, 1) + cj(x(k, 3)) * cj(x(l, 2)) - cj(x(k, 2)) * cj(x(l, 3));
    p.s2 = x(k, 2) * x(l, 0) - x(k, 0) * x(l, 2) + cj(x(k, 1)) * cj(x(l, 3)) - cj(x(k, 3)) * cj(x(l, 1));
    p.s3 = x(k, 2) * x(l, 1) - x(k, 1) * x(l, 2) + cj(x(k, 3)) * cj(x(l, 0)) - cj(x(k, 0)) * cj(x(l, 3));
    return p;
}

OctProjection three_qubit_projection_polynomial(std::span<const Complex, 8> t) {
    auto cj = [](Complex z) { return std::conj(z); };
    OctProjection p;
    p.s0 = t[0] * cj(t[1]) + t[2] * cj(t[3]) + t[4] * cj(t[5]) + t[6] * cj(t[7]);
    p.s1 = t[2] * t[1] - t[0] * t[3] + cj(t[6]) * cj(t[5]) - cj(t[4]) * cj(t[7]);
    p.s2 = t[4] * t[1] - t[0] * t[5] + cj(t[2]) * cj(t[7]) - cj(t[6]) * cj(t[3]);
    p.s3 = t[4] * t[3] - t[2] * t[5] + cj(t[6]) * cj(t[1]) - cj(t[0]) * cj(t[7]);
    return p;
}

}  // namespace hopfconc
