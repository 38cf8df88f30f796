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

#ifndef HOPFCONC_DYNAMICS_H
#define HOPFCONC_DYNAMICS_H

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "hopfconc/hopf_projection.h"
#include "hopfconc/quantum_state.h"

namespace hopfconc {

/// H = r (sin(theta) cos(phi) sigma_x + sin(theta) sin(phi) sigma_y + cos(theta) sigma_z),
/// hbar = 1. The closed forms reduce to the half-angle expressions at r = 1/2.
struct LocalHamiltonianSpec {
    double theta = 0;
    double phi = 0;
    double r = 0.5;
};

struct TrajectoryPoint {
    double t;
    double schmidt_re;
    double schmidt_im;
    double concurrence_mag;
};

/// exp(-i H t) = cos(r t) I - i sin(r t) (n . sigma), returned in SU(2) form.
LocalUnitary2 pauli_propagator(const LocalHamiltonianSpec &spec, double t);

/// sqrt(lambda) |00> + sqrt(1 - lambda) |11>. Throws InvalidArgument for
/// lambda outside [0, 1].
PureState schmidt_form_state(double lambda);

/// Quaterbit (q0, q1) of exp(-i H1 t) (x) exp(-i H2 t) applied to
/// schmidt_form_state(lambda), written out term by term.
QuaterState evolve_closed_form(double lambda, const LocalHamiltonianSpec &spec1, const LocalHamiltonianSpec &spec2,
                               double t);

/// Schmidt term of the projection from its closed form in (lambda, spec1, t),
/// together with the constant concurrence part sqrt(lambda (1 - lambda)).
/// Only the first Hamiltonian enters.
std::vector<TrajectoryPoint> schmidt_trajectory(double lambda, const LocalHamiltonianSpec &spec1,
                                                std::span<const double> times);

/// Local evolution of an arbitrary two-qubit state through the propagators.
/// Throws DimensionMismatch unless the state is [2, 2].
PureState evolve_numeric(const PureState &state, const LocalHamiltonianSpec &spec1,
                         const LocalHamiltonianSpec &spec2, double t);

}  // namespace hopfconc

#endif
