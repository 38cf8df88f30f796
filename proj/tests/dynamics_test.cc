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

#include "gtest/gtest.h"
#include "hopfconc/error.h"
#include "test_util.h"

using namespace hopfconc;
using hopfconc::testing::max_abs_diff;

namespace {

constexpr Complex kI{0.0, 1.0};

double dist(const LocalUnitary2 &u, const Eigen::Matrix2cd &m) {
    return (u.matrix() - m).cwiseAbs().maxCoeff();
}

LocalHamiltonianSpec random_spec(std::mt19937_64 &rng, bool random_rate) {
    std::uniform_real_distribution<double> theta(0, M_PI);
    std::uniform_real_distribution<double> phi(0, 2 * M_PI);
    std::uniform_real_distribution<double> rate(0.1, 2.0);
    LocalHamiltonianSpec spec{theta(rng), phi(rng)};
    if (random_rate) {
        spec.r = rate(rng);
    }
    return spec;
}

double max_state_diff(const QuaterState &a, const QuaterState &b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.coefficients.size(); i++) {
        worst = std::max(worst, max_abs_diff(a.coefficients[i], b.coefficients[i]));
    }
    return worst;
}

// Variant of the closed form with exp(i phi_2) on the first term of the e2
// part of q0. Propagation says the phase must be exp(-i phi_1).
Complex swapped_phase_q0_z2(double lambda, const LocalHamiltonianSpec &s1, const LocalHamiltonianSpec &s2, double t) {
    double sl = std::sqrt(lambda);
    double sm = std::sqrt(1 - lambda);
    Complex plus2 = std::cos(s2.r * t) + kI * std::cos(s2.theta) * std::sin(s2.r * t);
    Complex minus1 = std::cos(s1.r * t) - kI * std::cos(s1.theta) * std::sin(s1.r * t);
    return -kI * (sm * std::sin(s1.theta) * std::sin(s1.r * t) * std::polar(1.0, s2.phi) * plus2 +
                  sl * std::sin(s2.theta) * std::sin(s2.r * t) * std::polar(1.0, s2.phi) * minus1);
}

}  // namespace

TEST(PauliPropagator, Identity) {
    auto rng = hopfconc::testing::test_rng(60);
    LocalHamiltonianSpec spec = random_spec(rng, true);
    EXPECT_LT(dist(pauli_propagator(spec, 0), Eigen::Matrix2cd::Identity()), 1e-16);
}

TEST(PauliPropagator, AlongZ) {
    Eigen::Matrix2cd expected;
    expected << -kI, 0, 0, kI;
    EXPECT_LT(dist(pauli_propagator({0, 0, 0.5}, M_PI), expected), 1e-15);
}

TEST(PauliPropagator, MatchesMatrixExponential) {
    auto rng = hopfconc::testing::test_rng(61);
    for (int n = 0; n < 50; n++) {
        LocalHamiltonianSpec spec = random_spec(rng, true);
        double t = 3.0 * n / 50;
        Eigen::Matrix2cd h;
        double nx = std::sin(spec.theta) * std::cos(spec.phi);
        double ny = std::sin(spec.theta) * std::sin(spec.phi);
        double nz = std::cos(spec.theta);
        h << nz, Complex(nx, -ny), Complex(nx, ny), -nz;
        // exp(-i r t n.sigma) = cos(rt) - i sin(rt) n.sigma, since (n.sigma)^2 = 1.
        Eigen::Matrix2cd expected =
            std::cos(spec.r * t) * Eigen::Matrix2cd::Identity() - kI * std::sin(spec.r * t) * h;
        EXPECT_LT(dist(pauli_propagator(spec, t), expected), 1e-15);
        EXPECT_LT((h * h - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(PauliPropagator, GroupPropertyAndUnitarity) {
    auto rng = hopfconc::testing::test_rng(62);
    for (int n = 0; n < 50; n++) {
        LocalHamiltonianSpec spec = random_spec(rng, true);
        double t1 = 0.07 * n;
        double t2 = 1.3 - 0.01 * n;
        Eigen::Matrix2cd product = pauli_propagator(spec, t1).matrix() * pauli_propagator(spec, t2).matrix();
        EXPECT_LT(dist(pauli_propagator(spec, t1 + t2), product), 1e-14);
        LocalUnitary2 u = pauli_propagator(spec, t1);
        EXPECT_NEAR(std::norm(u.a) + std::norm(u.b), 1.0, 1e-15);
        Eigen::Matrix2cd m = u.matrix();
        EXPECT_LT((m.adjoint() * m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(SchmidtFormState, BuildsAndRejects) {
    PureState s = schmidt_form_state(0.3);
    EXPECT_NEAR(s[0].real(), std::sqrt(0.3), 1e-16);
    EXPECT_NEAR(s[3].real(), std::sqrt(0.7), 1e-16);
    EXPECT_EQ(s[1], Complex(0));
    EXPECT_EQ(s[2], Complex(0));
    for (double bad : {-0.1, 1.5, std::nan("")}) {
        try {
            schmidt_form_state(bad);
            FAIL() << bad;
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
        }
    }
}

TEST(EvolveClosedForm, MatchesNumericPropagation) {
    auto rng = hopfconc::testing::test_rng(63);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int n = 0; n < 300; n++) {
        double lambda = unit(rng);
        LocalHamiltonianSpec s1 = random_spec(rng, n % 2 == 1);
        LocalHamiltonianSpec s2 = random_spec(rng, n % 2 == 1);
        double t = 10 * unit(rng);
        QuaterState closed = evolve_closed_form(lambda, s1, s2, t);
        QuaterState numeric = quaterbit(evolve_numeric(schmidt_form_state(lambda), s1, s2, t));
        EXPECT_LT(max_state_diff(closed, numeric), 1e-13);
        EXPECT_NEAR(closed.norm2(), 1.0, 1e-13);
    }
}

TEST(EvolveClosedForm, SwappedPhaseOnQ0DisagreesWithPropagation) {
    LocalHamiltonianSpec s1{0.7, 0.4};
    LocalHamiltonianSpec s2{1.1, 2.3};
    double lambda = 0.3;
    double t = 1.7;
    QuaterState numeric = quaterbit(evolve_numeric(schmidt_form_state(lambda), s1, s2, t));
    EXPECT_GT(std::abs(swapped_phase_q0_z2(lambda, s1, s2, t) - numeric.coefficients[0].z2()), 1e-2);
    EXPECT_LT(std::abs(evolve_closed_form(lambda, s1, s2, t).coefficients[0].z2() - numeric.coefficients[0].z2()),
              1e-14);
}

TEST(EvolveNumeric, BellKeepsUnitConcurrence) {
    auto rng = hopfconc::testing::test_rng(64);
    for (int n = 0; n < 50; n++) {
        PureState out = evolve_numeric(ghz(2), random_spec(rng, true), random_spec(rng, true), 0.2 * n);
        EXPECT_NEAR(quat_concurrence(quaterbit(out)), 1.0, 1e-13);
    }
}

TEST(EvolveNumeric, RejectsOtherShapes) {
    try {
        evolve_numeric(ghz(3), {}, {}, 1.0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
    EXPECT_THROW(evolve_numeric(random_state(1, {2, 3}), {}, {}, 1.0), Error);
}

TEST(SchmidtTrajectory, BalancedStateStaysPut) {
    std::vector<double> times{0, 0.5, 1, 2, 5};
    for (const TrajectoryPoint &p : schmidt_trajectory(0.5, {0.9, 1.3}, times)) {
        EXPECT_LT(std::abs(p.schmidt_re), 1e-16);
        EXPECT_LT(std::abs(p.schmidt_im), 1e-16);
        EXPECT_NEAR(p.concurrence_mag, 0.5, 1e-16);
    }
}

TEST(SchmidtTrajectory, StartsAtZero) {
    std::vector<double> times{0};
    for (double lambda : {0.0, 0.2, 0.9, 1.0}) {
        TrajectoryPoint p = schmidt_trajectory(lambda, {0.4, 2.0}, times)[0];
        EXPECT_EQ(p.t, 0.0);
        EXPECT_LT(std::abs(p.schmidt_re), 1e-16);
        EXPECT_LT(std::abs(p.schmidt_im), 1e-16);
    }
}

TEST(SchmidtTrajectory, ProductStateQuarterTurn) {
    std::vector<double> times{M_PI / 2};
    TrajectoryPoint p = schmidt_trajectory(1.0, {M_PI / 2, 0}, times)[0];
    EXPECT_NEAR(p.schmidt_re, 0.0, 1e-15);
    EXPECT_NEAR(p.schmidt_im, 0.5, 1e-15);
    EXPECT_EQ(p.concurrence_mag, 0.0);
}

TEST(SchmidtTrajectory, MatchesProjectedNumericEvolution) {
    auto rng = hopfconc::testing::test_rng(65);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int n = 0; n < 50; n++) {
        double lambda = unit(rng);
        LocalHamiltonianSpec s1 = random_spec(rng, n % 2 == 1);
        LocalHamiltonianSpec s2 = random_spec(rng, true);
        std::vector<double> times;
        for (int k = 0; k <= 20; k++) {
            times.push_back(0.3 * k);
        }
        auto traj = schmidt_trajectory(lambda, s1, times);
        for (std::size_t k = 0; k < times.size(); k++) {
            QuaterState q = quaterbit(evolve_numeric(schmidt_form_state(lambda), s1, s2, times[k]));
            QuatProjection p = quat_project(q.coefficients[0], q.coefficients[1]);
            EXPECT_NEAR(traj[k].schmidt_re, p.schmidt.real(), 1e-13);
            EXPECT_NEAR(traj[k].schmidt_im, p.schmidt.imag(), 1e-13);
            EXPECT_NEAR(traj[k].concurrence_mag, std::abs(p.concurrence_part), 1e-13);
        }
    }
}

TEST(SchmidtTrajectory, RejectsBadWeight) {
    std::vector<double> times{0};
    EXPECT_THROW(schmidt_trajectory(1.2, {}, times), Error);
    EXPECT_THROW(evolve_closed_form(-0.5, {}, {}, 0), Error);
}

TEST(EvolveClosedForm, ProjectionIgnoresTheSecondHamiltonian) {
    auto rng = hopfconc::testing::test_rng(66);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int n = 0; n < 200; n++) {
        double lambda = unit(rng);
        LocalHamiltonianSpec s1 = random_spec(rng, false);
        double t = 8 * unit(rng);
        QuaterState a = evolve_closed_form(lambda, s1, random_spec(rng, false), t);
        QuaterState b = evolve_closed_form(lambda, s1, random_spec(rng, false), t);
        QuatProjection pa = quat_project(a.coefficients[0], a.coefficients[1]);
        QuatProjection pb = quat_project(b.coefficients[0], b.coefficients[1]);
        EXPECT_LT(std::abs(pa.schmidt - pb.schmidt), 1e-14);
        EXPECT_LT(std::abs(pa.concurrence_part - pb.concurrence_part), 1e-14);
        EXPECT_NEAR(std::abs(pa.concurrence_part), std::sqrt(lambda * (1 - lambda)), 1e-14);
    }
}
