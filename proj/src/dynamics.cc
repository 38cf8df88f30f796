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

#include "hopfconc/dynamics.h"

#include <cmath>

#include "hopfconc/error.h"

namespace hopfconc {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_lambda(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "Schmidt weight must lie in [0, 1]");
    }
}

Complex phase(double angle) {
    return std::polar(1.0, angle);
}

}  // namespace

LocalUnitary2 pauli_propagator(const LocalHamiltonianSpec &spec, double t) {
    const double c = std::cos(spec.r * t);
    const double s = std::sin(spec.r * t);
    // [[c - i s n_z, -i s (n_x - i n_y)], [-i s (n_x + i n_y), c + i s n_z]]
    Complex a{c, -s * std::cos(spec.theta)};
    Complex b = -kI * s * std::sin(spec.theta) * phase(-spec.phi);
    return {a, b};
}

PureState schmidt_form_state(double lambda) {
    check_lambda(lambda);
    return make_state({2, 2}, {std::sqrt(lambda), 0.0, 0.0, std::sqrt(1.0 - lambda)});
}

QuaterState evolve_closed_form(double lambda, const LocalHamiltonianSpec &spec1, const LocalHamiltonianSpec &spec2,
                               double t) {
    check_lambda(lambda);
    const double sl = std::sqrt(lambda);
    const double sm = std::sqrt(1.0 - lambda);
    const double c1 = std::cos(spec1.r * t);
    const double s1 = std::sin(spec1.r * t);
    const double c2 = std::cos(spec2.r * t);
    const double s2 = std::sin(spec2.r * t);
    const double ct1 = std::cos(spec1.theta);
    const double st1 = std::sin(spec1.theta);
    const double ct2 = std::cos(spec2.theta);
    const double st2 = std::sin(spec2.theta);
    const double p1 = spec1.phi;
    const double p2 = spec2.phi;

    const Complex minus1 = c1 - kI * ct1 * s1;
    const Complex plus1 = c1 + kI * ct1 * s1;
    const Complex minus2 = c2 - kI * ct2 * s2;
    const Complex plus2 = c2 + kI * ct2 * s2;

    Complex q0_z1 = sl * minus1 * minus2 - sm * phase(-(p1 + p2)) * st1 * st2 * s1 * s2;
    Complex q0_z2 = -kI * (sm * st1 * s1 * phase(-p1) * plus2 + sl * st2 * s2 * phase(p2) * minus1);
    Complex q1_z1 = -kI * (sl * st1 * s1 * phase(p1) * minus2 + sm * st2 * s2 * phase(-p2) * plus1);
    Complex q1_z2 = sm * plus1 * plus2 - sl * st1 * st2 * s1 * s2 * phase(p1 + p2);

    return {{Quaternion::from_complex(q0_z1, q0_z2), Quaternion::from_complex(q1_z1, q1_z2)}};
}

std::vector<TrajectoryPoint> schmidt_trajectory(double lambda, const LocalHamiltonianSpec &spec1,
                                                std::span<const double> times) {
    check_lambda(lambda);
    const double weight = 2 * lambda - 1;
    const double ct = std::cos(spec1.theta);
    const double st = std::sin(spec1.theta);
    const double cp = std::cos(spec1.phi);
    const double sp = std::sin(spec1.phi);
    const double concurrence = std::sqrt(lambda * (1.0 - lambda));
    std::vector<TrajectoryPoint> out;
    out.reserve(times.size());
    for (double t : times) {
        const double c = std::cos(spec1.r * t);
        const double s = std::sin(spec1.r * t);
        out.push_back({t, weight * s * st * (s * ct * cp + c * sp), weight * s * st * (c * cp - s * ct * sp),
                       concurrence});
    }
    return out;
}

PureState evolve_numeric(const PureState &state, const LocalHamiltonianSpec &spec1,
                         const LocalHamiltonianSpec &spec2, double t) {
    if (state.dims() != std::vector<std::size_t>{2, 2}) {
        throw Error(ErrorKind::DimensionMismatch, "local evolution needs a two-qubit state");
    }
    return apply_local(state, pauli_propagator(spec1, t).matrix(), pauli_propagator(spec2, t).matrix());
}

}  // namespace hopfconc
