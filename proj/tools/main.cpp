// Copyright 2026 The qsta authors
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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsta/bench.hpp"
#include "qsta/config.hpp"
#include "qsta/errors.hpp"
#include "qsta/holonomy.hpp"
#include "qsta/linalg.hpp"
#include "qsta/propagator.hpp"
#include "qsta/schedule.hpp"
#include "qsta/tomography.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonArgs {
    std::string config_path;
    std::string gate_name;
    double theta = -1.0, phi = -1.0, gamma = 10.0;
    bool no_noise = false;
    std::string output;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_gate = true) {
    cmd->add_option("--config", a.config_path, "JSON config file");
    if (with_gate) {
        cmd->add_option("--gate,-g", a.gate_name, "named gate: I, Z, X, H, Xhalf");
        cmd->add_option("--theta", a.theta, "rotation-axis polar angle (rad)");
        cmd->add_option("--phi", a.phi, "rotation-axis azimuth (rad)");
        cmd->add_option("--gamma", a.gamma, "rotation angle (rad)");
    }
    cmd->add_flag("--no-noise", a.no_noise, "disable the decoherence model");
    cmd->add_option("--output,-o", a.output, "output file path (default: stdout)");
}

qsta::RunConfig make_config(const CommonArgs& a) {
    qsta::RunConfig c;
    if (!a.config_path.empty()) c = qsta::load_config(a.config_path);
    if (!a.gate_name.empty()) {
        c.gate_name = a.gate_name;
        c.theta.reset();
        c.phi.reset();
        c.gamma.reset();
    }
    if (a.theta >= 0.0) {
        c.gate_name.reset();
        c.theta = a.theta;
        c.phi = (a.phi >= 0.0) ? a.phi : 0.0;
        c.gamma = (a.gamma <= 9.0) ? a.gamma : 0.0;
    }
    if (a.no_noise) c.noise_enabled = false;
    if (!a.output.empty()) c.output = a.output;
    return c;
}

std::string gate_label(const qsta::RunConfig& c) {
    return c.gate_name.value_or("custom");
}

// Writes to the configured output path, or stdout when none is set.
struct OutputStream {
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw qsta::ConfigError("output", "cannot open " + path);
        }
    }
    std::ostream& get() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

int cmd_simulate_gate(const CommonArgs& args, const std::string& trajectory_path,
                      double alpha, const std::string& scheme_flag) {
    qsta::RunConfig c = make_config(args);
    if (!scheme_flag.empty()) c.scheme = scheme_flag;
    const qsta::GateSpec gate = c.gate();
    const qsta::SweepOptions opts = c.sweep_options();
    qsta::ErrorModel err;
    err.alpha_rabi = alpha;

    qsta::ScheduleVariant schedule =
        c.scheme_enum() == qsta::Scheme::Nhqc
            ? qsta::ScheduleVariant(qsta::NhqcSchedule::for_gate(
                  gate, opts.omega_a, opts.duration_t))
            : qsta::ScheduleVariant(qsta::StaSchedule::for_gate(
                  gate, opts.omega_a, opts.duration_t));

    const Eigen::Matrix2cd target = qsta::holonomy_matrix(gate);
    const qsta::UnitaryResult u =
        qsta::evolve_unitary(schedule, qsta::HamiltonianKind::Sta, err, c.n_steps);
    const qsta::ExtractedGate eg = qsta::extract_qubit_gate(u.final_unitary, target);
    double fidelity;
    if (eg.unitarized) {
        fidelity = qsta::average_gate_fidelity(eg.qubit_unitary, target);
    } else {
        const std::complex<double> tr = (target.adjoint() * eg.qubit_unitary).trace();
        fidelity = (std::norm(tr) + 2.0) / 6.0;
    }

    nlohmann::json j;
    j["gate"] = gate_label(c);
    j["theta"] = gate.theta;
    j["phi"] = gate.phi_rel;
    j["gamma"] = gate.gamma;
    j["scheme"] = c.scheme;
    j["alpha"] = alpha;
    j["fidelity"] = fidelity;
    j["leakage"] = eg.leakage;
    j["n_steps"] = u.steps_used;
    j["duration_t_s"] = c.duration_t_s;
    j["omega_a_hz"] = c.omega_a_hz;
    j["noise_enabled"] = c.noise_enabled;

    if (!trajectory_path.empty()) {
        Eigen::Matrix3cd rho0 = Eigen::Matrix3cd::Zero();
        rho0(0, 0) = 1.0;
        const qsta::StateTrajectory traj =
            qsta::simulate_state(schedule, qsta::HamiltonianKind::Sta, err, c.noise(),
                                 rho0, c.n_steps, c.trajectory_points);
        std::ofstream tf(trajectory_path);
        if (!tf) throw qsta::ConfigError("trajectory", "cannot open " + trajectory_path);
        qsta::write_trajectory_csv(tf, traj);
        j["trajectory"] = trajectory_path;
    }
    OutputStream out(c.output);
    out.get() << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_tomography(const CommonArgs& args, double alpha, bool gate_based_prep) {
    qsta::RunConfig c = make_config(args);
    if (gate_based_prep) c.gate_based_prep = true;
    const qsta::GateSpec gate = c.gate();
    const qsta::SweepOptions opts = c.sweep_options();
    qsta::ErrorModel err;
    err.alpha_rabi = alpha;
    const qsta::ScheduleVariant schedule =
        qsta::StaSchedule::for_gate(gate, opts.omega_a, opts.duration_t);
    const qsta::Channel ch =
        c.gate_based_prep
            ? qsta::lindblad_channel_gate_prepared(schedule, qsta::HamiltonianKind::Sta,
                                                   err, c.noise(), c.n_steps,
                                                   gate_label(c))
            : qsta::lindblad_channel(schedule, qsta::HamiltonianKind::Sta, err,
                                     c.noise(), c.n_steps, gate_label(c));
    const qsta::ChiMatrix chi = qsta::process_chi(ch);
    const double fid = qsta::process_fidelity(chi, qsta::holonomy_matrix(gate));
    OutputStream out(c.output);
    qsta::write_chi_json(out.get(), chi, fid, gate_label(c));
    return kExitOk;
}

int cmd_sweep_error(const CommonArgs& args, const std::string& scheme_flag,
                    std::vector<double> alphas, const std::string& params_path) {
    qsta::RunConfig c = make_config(args);
    if (!scheme_flag.empty()) c.scheme = scheme_flag;
    if (!alphas.empty()) c.alphas = alphas;
    if (c.alphas.empty()) {
        for (int k = -4; k <= 4; ++k) c.alphas.push_back(0.025 * k);
    }
    qsta::SweepOptions opts = c.sweep_options();
    if (!params_path.empty()) {
        std::ifstream pf(params_path);
        if (!pf) throw qsta::ConfigError("params", "cannot open " + params_path);
        nlohmann::json pj;
        pf >> pj;
        opts.family_params = pj.at("params").get<std::vector<double>>();
    }
    const qsta::SweepResult r = qsta::sweep_alpha(c.scheme_enum(), c.gate(),
                                                  c.alphas, c.noise(), opts);
    OutputStream out(c.output);
    qsta::write_sweep_csv(out.get(), r);
    return kExitOk;
}

int cmd_optimize(const CommonArgs& args, const std::string& log_path,
                 std::vector<double> grid) {
    qsta::RunConfig c = make_config(args);
    if (!grid.empty()) c.alphas = grid;
    if (c.alphas.empty()) c.alphas = {-0.1, -0.05, 0.0, 0.05, 0.1};
    qsta::SweepOptions opts = c.sweep_options();
    const qsta::OptimizationOutcome o = qsta::optimize_schedule(
        c.gate(), c.alphas, c.family_dim, c.budget, opts);

    if (!log_path.empty()) {
        std::ofstream lf(log_path);
        if (!lf) throw qsta::ConfigError("log", "cannot open " + log_path);
        qsta::write_optimization_log(lf, o);
    }
    nlohmann::json j;
    j["gate"] = gate_label(c);
    j["params"] = o.params;
    j["objective_before"] = o.objective_before;
    j["objective_after"] = o.objective_after;
    j["evaluations"] = o.evaluations;
    j["alpha_grid"] = c.alphas;
    j["omega_a_hz"] = c.omega_a_hz;
    j["duration_t_s"] = c.duration_t_s;
    OutputStream out(c.output);
    out.get() << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_export_pulses(const CommonArgs& args, double alpha) {
    qsta::RunConfig c = make_config(args);
    const qsta::SweepOptions opts = c.sweep_options();
    const qsta::StaSchedule s =
        qsta::StaSchedule::for_gate(c.gate(), opts.omega_a, opts.duration_t);
    qsta::ErrorModel err;
    err.alpha_rabi = alpha;
    OutputStream out(c.output);
    qsta::export_pulses_csv(out.get(), s, err, c.samples);
    return kExitOk;
}

int cmd_phases(const CommonArgs& args) {
    qsta::RunConfig c = make_config(args);
    const qsta::SweepOptions opts = c.sweep_options();
    // Symmetric gamma split keeps the discrete loop-phase logs away from
    // the principal-branch cut for any gamma.
    const qsta::StaSchedule s = qsta::StaSchedule::symmetric_split(
        c.gate(), opts.omega_a, opts.duration_t);
    const qsta::PhaseReport r = qsta::phase_report(s, c.n_steps);
    nlohmann::json j;
    j["gate"] = gate_label(c);
    j["geometric_rad"] = r.geometric;
    j["dynamical_rad"] = r.dynamical;
    j["total_rad"] = r.total;
    j["n_steps"] = c.n_steps;
    OutputStream out(c.output);
    out.get() << j.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pulse-level simulator for counterdiabatic holonomic gates on a "
                 "three-level ladder system"};
    app.require_subcommand(1);

    CommonArgs sim_args, tomo_args, sweep_args, opt_args, pulse_args, phase_args;
    std::string trajectory_path, scheme_flag, sweep_scheme, params_path, log_path;
    double sim_alpha = 0.0, tomo_alpha = 0.0, pulse_alpha = 0.0;
    bool gate_based_prep = false;
    std::vector<double> sweep_alphas, opt_grid;

    CLI::App* sim = app.add_subcommand("simulate-gate",
                                       "simulate one gate and report fidelity/leakage");
    add_common(sim, sim_args);
    sim->add_option("--trajectory", trajectory_path, "write a trajectory CSV from |0>");
    sim->add_option("--alpha", sim_alpha, "Rabi-amplitude control error");
    sim->add_option("--scheme", scheme_flag, "sta | nhqc");

    CLI::App* tomo = app.add_subcommand("tomography", "process tomography of a gate");
    add_common(tomo, tomo_args);
    tomo->add_option("--alpha", tomo_alpha, "Rabi-amplitude control error");
    tomo->add_flag("--gate-based-prep", gate_based_prep,
                   "prepare tomography inputs with gates instead of exact assignment");

    CLI::App* sweep = app.add_subcommand("sweep-error",
                                         "fidelity versus control error alpha");
    add_common(sweep, sweep_args);
    sweep->add_option("--scheme", sweep_scheme, "sta | nhqc | sta-optimized");
    sweep->add_option("--alphas", sweep_alphas, "alpha grid");
    sweep->add_option("--params", params_path,
                      "optimized-schedule JSON (from the optimize subcommand)");

    CLI::App* opt = app.add_subcommand("optimize", "pulse-family optimization");
    add_common(opt, opt_args);
    opt->add_option("--alpha-grid", opt_grid, "alpha grid for the objective");
    opt->add_option("--log", log_path, "JSON-lines objective log");

    CLI::App* pulses = app.add_subcommand("export-pulses", "two-tone waveform CSV");
    add_common(pulses, pulse_args);
    pulses->add_option("--alpha", pulse_alpha, "Rabi-amplitude control error");

    CLI::App* phases = app.add_subcommand("phases",
                                          "geometric/dynamical phase bookkeeping");
    add_common(phases, phase_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sim->parsed()) return cmd_simulate_gate(sim_args, trajectory_path,
                                                    sim_alpha, scheme_flag);
        if (tomo->parsed()) return cmd_tomography(tomo_args, tomo_alpha, gate_based_prep);
        if (sweep->parsed()) return cmd_sweep_error(sweep_args, sweep_scheme,
                                                    sweep_alphas, params_path);
        if (opt->parsed()) return cmd_optimize(opt_args, log_path, opt_grid);
        if (pulses->parsed()) return cmd_export_pulses(pulse_args, pulse_alpha);
        if (phases->parsed()) return cmd_phases(phase_args);
    } catch (const qsta::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const qsta::InvalidInput& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const qsta::OutOfRange& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitConfig;
}
