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

#include "hopfconc/commands.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "hopfconc/concurrence_oracle.h"
#include "hopfconc/dynamics.h"
#include "hopfconc/error.h"
#include "hopfconc/hopf_projection.h"
#include "hopfconc/quantum_state.h"
#include "hopfconc/state_io.h"
#include "hopfconc/verification.h"

namespace hopfconc {

namespace {

using nlohmann::json;

struct StateSource {
    std::string state_file;
    std::size_t ghz_qubits = 0;
    std::size_t w_qubits = 0;
    std::optional<std::uint64_t> random_seed;
    std::vector<std::size_t> random_dims{2, 2, 2};
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_source_options(CLI::App &cmd, StateSource &src) {
    auto *file = cmd.add_option("--state", src.state_file, "JSON state file");
    auto *g = cmd.add_option("--ghz", src.ghz_qubits, "GHZ state on m qubits");
    auto *wo = cmd.add_option("--w", src.w_qubits, "W state on m qubits");
    auto *rnd = cmd.add_option("--random", src.random_seed, "random state from this seed");
    cmd.add_option("--dims", src.random_dims, "factor dimensions for --random")->delimiter(',')->needs(rnd);
    file->excludes(g, wo, rnd);
    g->excludes(wo, rnd);
    wo->excludes(rnd);
}

PureState load_source(const StateSource &src) {
    if (!src.state_file.empty()) {
        return load_state_file(src.state_file);
    }
    if (src.ghz_qubits != 0) {
        return ghz(src.ghz_qubits);
    }
    if (src.w_qubits != 0) {
        return w(src.w_qubits);
    }
    if (src.random_seed) {
        return random_state(*src.random_seed, src.random_dims);
    }
    throw UsageError("one of --state, --ghz, --w, --random is required");
}

std::size_t parse_split(const std::string &split) {
    if (split == "2xN") {
        return 2;
    }
    if (split == "4xN") {
        return 4;
    }
    throw UsageError("--split must be 2xN or 4xN");
}

std::string format_sci(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", value);
    return buf;
}

json complex_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

// ---- concurrence ---------------------------------------------------------

struct ConcurrenceArgs {
    StateSource source;
    std::string split = "2xN";
    std::string method = "hopf";
};

int cmd_concurrence(const ConcurrenceArgs &args, std::ostream &out) {
    std::size_t left = parse_split(args.split);
    if (left == 4 && args.method == "generators") {
        throw UsageError("the generator method is defined for 2xN splits only");
    }
    PureState state = load_source(args.source);
    std::size_t right = state.size() / left;
    split_point(state, left);

    std::vector<std::pair<std::string, double>> values;
    bool all = args.method == "all";
    if (all || args.method == "hopf") {
        values.emplace_back("hopf", left == 2 ? quat_concurrence(state) : oct_concurrence(state));
    }
    if (all || args.method == "minors") {
        values.emplace_back("minors", minor_concurrence(state, left));
    }
    if ((all && left == 2) || args.method == "generators") {
        values.emplace_back("generators", generator_concurrence(state));
    }

    out << "split " << args.split << " (" << left << " x " << right << ")\n";
    for (const auto &[name, value] : values) {
        out << name << " " << format_fixed6(value) << "\n";
    }
    if (!all) {
        return kExitOk;
    }
    double discrepancy = 0;
    for (std::size_t i = 0; i < values.size(); i++) {
        for (std::size_t j = i + 1; j < values.size(); j++) {
            discrepancy = std::max(discrepancy, std::abs(values[i].second - values[j].second));
        }
    }
    out << "max_discrepancy " << format_sci(discrepancy) << "\n";
    return discrepancy > kCliDiscrepancyTolerance ? kExitDiscrepancy : kExitOk;
}

// ---- project -------------------------------------------------------------

struct ProjectArgs {
    StateSource source;
    std::string split = "2xN";
};

int cmd_project(const ProjectArgs &args, std::ostream &out) {
    std::size_t left = parse_split(args.split);
    PureState state = load_source(args.source);
    json doc;
    doc["split"] = args.split;
    doc["dims"] = state.dims();
    json pairs = json::array();
    if (left == 2) {
        QuaterState q = quaternify(state);
        for (const QuatPairProjection &p : quat_projections(q)) {
            pairs.push_back({{"j", p.j},
                             {"k", p.k},
                             {"schmidt", complex_json(p.projection.schmidt)},
                             {"concurrence_part", complex_json(p.projection.concurrence_part)},
                             {"concurrence_part_magnitude", std::abs(p.projection.concurrence_part)}});
        }
        doc["concurrence"] = quat_concurrence(q);
    } else {
        OctoState o = octonify(state);
        for (const OctPairProjection &p : oct_projections(o)) {
            pairs.push_back({{"k", p.k},
                             {"l", p.l},
                             {"s0", complex_json(p.projection.s0)},
                             {"s1", complex_json(p.projection.s1)},
                             {"s2", complex_json(p.projection.s2)},
                             {"s3", complex_json(p.projection.s3)},
                             {"hypercomplex_magnitude", std::sqrt(p.projection.hypercomplex_norm2())}});
        }
        doc["concurrence"] = oct_concurrence(o);
    }
    doc["pairs"] = std::move(pairs);
    out << doc.dump(2) << "\n";
    return kExitOk;
}

// ---- evolve --------------------------------------------------------------

struct EvolveArgs {
    double lambda = 0.5;
    LocalHamiltonianSpec spec1;
    LocalHamiltonianSpec spec2;
    double r = 0.5;
    double t_max = 0;
    std::size_t steps = 0;
    std::string out_path = "-";
};

int cmd_evolve(EvolveArgs args, std::ostream &out) {
    if (!(args.lambda >= 0 && args.lambda <= 1)) {
        throw UsageError("--lambda must lie in [0, 1]");
    }
    if (args.steps < 2) {
        throw UsageError("--steps must be >= 2");
    }
    if (!(args.t_max > 0) || !std::isfinite(args.t_max)) {
        throw UsageError("--t-max must be positive");
    }
    if (!(args.r >= 0) || !std::isfinite(args.r)) {
        throw UsageError("--r must be non-negative");
    }
    args.spec1.r = args.r;
    args.spec2.r = args.r;

    std::vector<double> times(args.steps);
    for (std::size_t i = 0; i < args.steps; i++) {
        times[i] = args.t_max * static_cast<double>(i) / static_cast<double>(args.steps - 1);
    }
    std::vector<TrajectoryPoint> points = schmidt_trajectory(args.lambda, args.spec1, times);

    // Every row is also recomputed from the evolved quaterbit, which is where
    // the second Hamiltonian enters.
    double worst = 0;
    for (const TrajectoryPoint &p : points) {
        QuaterState q = evolve_closed_form(args.lambda, args.spec1, args.spec2, p.t);
        QuatProjection proj = quat_project(q.coefficients[0], q.coefficients[1]);
        worst = std::max({worst, std::abs(proj.schmidt - Complex(p.schmidt_re, p.schmidt_im)),
                          std::abs(std::abs(proj.concurrence_part) - p.concurrence_mag)});
    }

    std::ostringstream csv;
    csv << "t,schmidt_re,schmidt_im,concurrence\n";
    for (const TrajectoryPoint &p : points) {
        csv << format_fixed6(p.t) << "," << format_fixed6(p.schmidt_re) << "," << format_fixed6(p.schmidt_im)
            << "," << format_fixed6(p.concurrence_mag) << "\n";
    }
    if (args.out_path == "-") {
        out << csv.str();
    } else {
        std::ofstream file(args.out_path, std::ios::binary);
        if (!file || !(file << csv.str()) || !file.flush()) {
            throw Error(ErrorKind::Io, "cannot write " + args.out_path);
        }
    }
    if (worst > kCliDiscrepancyTolerance) {
        out << "trajectory discrepancy " << format_sci(worst) << "\n";
        return kExitDiscrepancy;
    }
    return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
    std::uint64_t seed = 20260101;
    std::size_t trials = 200;
};

int cmd_verify(const VerifyArgs &args, std::ostream &out) {
    if (args.trials < 1) {
        throw UsageError("--trials must be >= 1");
    }
    bool ok = true;
    for (const SuiteResult &r : run_verification(args.seed, args.trials)) {
        ok = ok && r.passed();
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " trials=" << r.trials
            << " worst=" << format_sci(r.worst) << " tolerance=" << format_sci(r.tolerance) << "\n";
    }
    out << (ok ? "all suites passed" : "verification FAILED") << "\n";
    return ok ? kExitOk : kExitDiscrepancy;
}

}  // namespace

std::string format_fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string s = buf;
    if (s == "-0.000000") {
        s = "0.000000";
    }
    return s;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hypercomplex stereographic projection and concurrence of bipartite pure states", "hopfconc"};
    app.require_subcommand(1);

    ConcurrenceArgs conc;
    auto *c = app.add_subcommand("concurrence", "concurrence of a 2xN or 4xN split");
    add_source_options(*c, conc.source);
    c->add_option("--split", conc.split, "2xN or 4xN")->check(CLI::IsMember({"2xN", "4xN"}));
    c->add_option("--method", conc.method, "hopf, minors, generators or all")
        ->check(CLI::IsMember({"hopf", "minors", "generators", "all"}));

    ProjectArgs proj;
    auto *p = app.add_subcommand("project", "pairwise stereographic projections as JSON");
    add_source_options(*p, proj.source);
    p->add_option("--split", proj.split, "2xN or 4xN")->check(CLI::IsMember({"2xN", "4xN"}));

    EvolveArgs ev;
    auto *e = app.add_subcommand("evolve", "Schmidt-term trajectory under local Hamiltonians as CSV");
    e->add_option("--lambda", ev.lambda, "Schmidt weight of the initial state");
    e->add_option("--theta1", ev.spec1.theta, "polar angle of H1");
    e->add_option("--phi1", ev.spec1.phi, "azimuth of H1");
    e->add_option("--theta2", ev.spec2.theta, "polar angle of H2");
    e->add_option("--phi2", ev.spec2.phi, "azimuth of H2");
    e->add_option("--r", ev.r, "field magnitude shared by both Hamiltonians");
    e->add_option("--t-max", ev.t_max, "last time sample")->required();
    e->add_option("--steps", ev.steps, "number of uniformly spaced samples")->required();
    e->add_option("--out", ev.out_path, "output CSV path, - for stdout");

    VerifyArgs ver;
    auto *v = app.add_subcommand("verify", "randomized invariant suites");
    v->add_option("--seed", ver.seed, "generator seed");
    v->add_option("--trials", ver.trials, "draws per suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &ex) {
        return app.exit(ex, out, err) == 0 ? kExitOk : kExitUsage;
    } catch (const CLI::ParseError &ex) {
        app.exit(ex, out, err);
        return kExitUsage;
    }

    try {
        if (c->parsed()) {
            return cmd_concurrence(conc, out);
        }
        if (p->parsed()) {
            return cmd_project(proj, out);
        }
        if (e->parsed()) {
            return cmd_evolve(ev, out);
        }
        return cmd_verify(ver, out);
    } catch (const UsageError &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const Error &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace hopfconc
