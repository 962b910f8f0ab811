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

#include "qsta/propagator.hpp"

#include <cmath>
#include <ostream>

#include "qsta/errors.hpp"
#include "qsta/linalg.hpp"

namespace qsta {

NoiseModel NoiseModel::checked(double t1_e, double t1_f, double t2_ge,
                               double t2_ef, bool enabled) {
    if (!(t1_e > 0 && t1_f > 0 && t2_ge > 0 && t2_ef > 0)) {
        throw InvalidNoiseModel("noise times must be positive");
    }
    NoiseModel n{t1_e, t1_f, t2_ge, t2_ef, enabled};
    if (n.gamma_phi_e() < 0.0) {
        throw InvalidNoiseModel("derived e-level pure-dephasing rate is negative");
    }
    return n;
}

NoiseModel NoiseModel::disabled() {
    NoiseModel n;
    n.enabled = false;
    return n;
}

double NoiseModel::gamma_phi_e() const { return 1.0 / t2_ge - 1.0 / (2.0 * t1_e); }

double NoiseModel::gamma_phi_f() const {
    return std::max(0.0, 1.0 / t2_ef - 1.0 / (2.0 * t1_f));
}

std::vector<Eigen::Matrix3cd> NoiseModel::collapse_operators() const {
    if (gamma_phi_e() < 0.0) {
        throw InvalidNoiseModel("derived e-level pure-dephasing rate is negative");
    }
    std::vector<Eigen::Matrix3cd> ls;
    Eigen::Matrix3cd l = Eigen::Matrix3cd::Zero();
    l(0, 2) = std::sqrt(1.0 / t1_e);  // e -> g relaxation
    ls.push_back(l);
    l.setZero();
    l(2, 1) = std::sqrt(1.0 / t1_f);  // f -> e relaxation (ladder)
    ls.push_back(l);
    l.setZero();
    l(2, 2) = std::sqrt(2.0 * gamma_phi_e());
    ls.push_back(l);
    l.setZero();
    l(1, 1) = std::sqrt(2.0 * gamma_phi_f());
    ls.push_back(l);
    return ls;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

// One propagation frame: a constant orthonormal basis (coupled, decoupled,
// |e>) in which every step Hamiltonian is a 2x2 Hermitian block
// [[0, g(t)], [conj g(t), delta(t)]] on the (coupled, e) pair.
struct Frame {
    Eigen::Matrix3cd basis;  // columns: coupled, decoupled, e
    double duration = 0.0;
};

struct BlockSample {
    Complex g{};
    double delta = 0.0;
};

Frame make_frame(const ScheduleVariant& schedule) {
    Frame f;
    const Eigen::Vector3cd e = Eigen::Vector3cd::Unit(2);
    if (const auto* fz = std::get_if<FrozenDrive>(&schedule)) {
        const BrightDark bd = bright_dark_pair(fz->gate);
        f.basis << bd.bright, bd.dark, e;
        f.duration = fz->duration_t;
        return f;
    }
    GateSpec gate;
    double duration = 0.0;
    if (const auto* s = std::get_if<StaSchedule>(&schedule)) {
        gate = s->gate;
        duration = s->duration_t;
    } else if (const auto* s = std::get_if<NhqcSchedule>(&schedule)) {
        gate = s->gate;
        duration = s->duration_t;
    } else {
        const auto& opt = std::get<OptimizedStaSchedule>(schedule);
        gate = opt.base.gate;
        duration = opt.base.duration_t;
    }
    const BrightDark bd = bright_dark_pair(driven_loop_spec(gate));
    f.basis << bd.bright, bd.dark, e;
    f.duration = duration;
    return f;
}

BlockSample block_sample(const ScheduleVariant& schedule, HamiltonianKind kind,
                         const ErrorModel& err, double t) {
    DriveSample d;
    double phase = 0.0;
    if (const auto* fz = std::get_if<FrozenDrive>(&schedule)) {
        d = fz->sample;
        phase = d.phi1;  // literal, no drive-frame adjustment
    } else {
        if (const auto* s = std::get_if<StaSchedule>(&schedule)) {
            d = drive_at(*s, t, err);
        } else if (const auto* s = std::get_if<NhqcSchedule>(&schedule)) {
            d = nhqc_drive_at(*s, t, err);
        } else {
            d = optimized_drive_at(std::get<OptimizedStaSchedule>(schedule), t, err);
        }
        if (d.omega < 0.0) {
            throw InvalidInput("drive sample has negative Rabi amplitude");
        }
        phase = applied_drive_phase(d);
    }
    Complex coupling = d.omega / 2.0;
    if (kind == HamiltonianKind::Sta) coupling += kI * d.mixing_rate;
    return BlockSample{coupling * std::exp(kI * phase), d.delta};
}

// exp(-i dt [[0, g], [conj g, delta]]), exact.
Eigen::Matrix2cd block_exponential(const BlockSample& b, double dt) {
    const double half_delta = b.delta / 2.0;
    const double r = std::sqrt(half_delta * half_delta + std::norm(b.g));
    Eigen::Matrix2cd u;
    if (r == 0.0) {
        u.setIdentity();
        return u;
    }
    const double c = std::cos(r * dt);
    const double s = std::sin(r * dt) / r;
    // H = half_delta * I + M with M = [[-half_delta, g], [conj g, half_delta]]
    const Complex phase = std::exp(-kI * half_delta * dt);
    u(0, 0) = phase * (c + kI * s * half_delta);
    u(0, 1) = phase * (-kI * s * b.g);
    u(1, 0) = phase * (-kI * s * std::conj(b.g));
    u(1, 1) = phase * (c - kI * s * half_delta);
    return u;
}

int even_steps(int n_steps, int minimum) {
    if (n_steps < minimum) {
        throw InvalidInput("n_steps below the required minimum");
    }
    return n_steps + (n_steps % 2);
}

// Embed the (coupled, e) block into the frame basis and rotate to the
// computational basis.
Eigen::Matrix3cd embed(const Frame& f, const Eigen::Matrix2cd& u) {
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity();
    m(0, 0) = u(0, 0);
    m(0, 2) = u(0, 1);
    m(2, 0) = u(1, 0);
    m(2, 2) = u(1, 1);
    return f.basis * m * f.basis.adjoint();
}

Eigen::Matrix3cd dissipator(const std::vector<Eigen::Matrix3cd>& ls,
                            const std::vector<Eigen::Matrix3cd>& lls,
                            const Eigen::Matrix3cd& rho) {
    Eigen::Matrix3cd d = Eigen::Matrix3cd::Zero();
    for (std::size_t k = 0; k < ls.size(); ++k) {
        d += ls[k] * rho * ls[k].adjoint();
        d -= 0.5 * (lls[k] * rho + rho * lls[k]);
    }
    return d;
}

}  // namespace

UnitaryResult evolve_unitary(const ScheduleVariant& schedule, HamiltonianKind kind,
                             const ErrorModel& err, int n_steps) {
    const int n = even_steps(n_steps, 100);
    const Frame f = make_frame(schedule);
    const double dt = f.duration / n;
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
    for (int k = 0; k < n; ++k) {
        const double t = (k + 0.5) * dt;
        u = block_exponential(block_sample(schedule, kind, err, t), dt) * u;
    }
    return UnitaryResult{embed(f, u), n};
}

LindbladResult evolve_lindblad(const ScheduleVariant& schedule, HamiltonianKind kind,
                               const ErrorModel& err, const NoiseModel& noise,
                               const Eigen::Matrix3cd& rho0, int n_steps) {
    if (!is_density_matrix(rho0)) {
        throw InvalidInput("evolve_lindblad: rho0 is not a valid density matrix");
    }
    const int n = even_steps(n_steps, 100);
    const Frame f = make_frame(schedule);
    const double dt = f.duration / n;
    std::vector<Eigen::Matrix3cd> ls, lls;
    if (noise.enabled) {
        ls = noise.collapse_operators();
        for (const auto& l : ls) lls.push_back(l.adjoint() * l);
    }
    Eigen::Matrix3cd rho = rho0;
    for (int k = 0; k < n; ++k) {
        const double t = (k + 0.5) * dt;
        const Eigen::Matrix3cd u =
            embed(f, block_exponential(block_sample(schedule, kind, err, t), dt));
        rho = u * rho * u.adjoint();
        if (noise.enabled) {
            rho += dt * dissipator(ls, lls, rho);
        }
        rho = 0.5 * (rho + rho.adjoint().eval());
    }
    return LindbladResult{rho, n};
}

StateTrajectory simulate_state(const ScheduleVariant& schedule, HamiltonianKind kind,
                               const ErrorModel& err, const NoiseModel& noise,
                               const Eigen::Matrix3cd& rho0, int n_steps,
                               int n_record) {
    if (!is_density_matrix(rho0)) {
        throw InvalidInput("simulate_state: rho0 is not a valid density matrix");
    }
    const int n = even_steps(n_steps, 100);
    const Frame f = make_frame(schedule);
    const double dt = f.duration / n;
    std::vector<Eigen::Matrix3cd> ls, lls;
    if (noise.enabled) {
        ls = noise.collapse_operators();
        for (const auto& l : ls) lls.push_back(l.adjoint() * l);
    }
    const int stride = std::max(1, n / std::max(1, n_record));
    StateTrajectory out;
    Eigen::Matrix3cd rho = rho0;
    auto record = [&](double t) {
        out.points.push_back(TrajectoryPoint{t, rho(0, 0).real(), rho(1, 1).real(),
                                             rho(2, 2).real(), rho(0, 1)});
    };
    record(0.0);
    for (int k = 0; k < n; ++k) {
        const double t = (k + 0.5) * dt;
        const Eigen::Matrix3cd u =
            embed(f, block_exponential(block_sample(schedule, kind, err, t), dt));
        rho = u * rho * u.adjoint();
        if (noise.enabled) {
            rho += dt * dissipator(ls, lls, rho);
        }
        rho = 0.5 * (rho + rho.adjoint().eval());
        if ((k + 1) % stride == 0 || k + 1 == n) record((k + 1) * dt);
    }
    out.final_rho = rho;
    out.steps_used = n;
    return out;
}

LindbladResult decay_free(const NoiseModel& noise, const Eigen::Matrix3cd& rho0,
                          double duration, int n_steps) {
    if (!is_density_matrix(rho0)) {
        throw InvalidInput("decay_free: rho0 is not a valid density matrix");
    }
    if (!(duration > 0)) throw InvalidInput("decay_free: duration must be > 0");
    const int n = even_steps(n_steps, 100);
    const double dt = duration / n;
    std::vector<Eigen::Matrix3cd> ls, lls;
    if (noise.enabled) {
        ls = noise.collapse_operators();
        for (const auto& l : ls) lls.push_back(l.adjoint() * l);
    }
    Eigen::Matrix3cd rho = rho0;
    for (int k = 0; k < n; ++k) {
        if (noise.enabled) rho += dt * dissipator(ls, lls, rho);
        rho = 0.5 * (rho + rho.adjoint().eval());
    }
    return LindbladResult{rho, n};
}

ConvergenceReport convergence_check(const ScheduleVariant& schedule,
                                    HamiltonianKind kind, const ErrorModel& err,
                                    int n_steps) {
    const int n = even_steps(n_steps, 200);
    const Eigen::Matrix3cd u1 = evolve_unitary(schedule, kind, err, n).final_unitary;
    const Eigen::Matrix3cd u2 = evolve_unitary(schedule, kind, err, 2 * n).final_unitary;
    const Eigen::Matrix3cd u4 = evolve_unitary(schedule, kind, err, 4 * n).final_unitary;
    ConvergenceReport r;
    r.err_coarse = max_norm_diff(u1, u2);
    r.err_fine = max_norm_diff(u2, u4);
    if (r.err_coarse < 1e-13 && r.err_fine < 1e-13) {
        r.exact = true;
        return r;
    }
    r.order = std::log2(r.err_coarse / r.err_fine);
    return r;
}

void write_trajectory_csv(std::ostream& os, const StateTrajectory& traj) {
    os << "t_s,p0,p1,pe,re_rho01,im_rho01\n";
    os.precision(12);
    for (const auto& p : traj.points) {
        os << p.t << ',' << p.p0 << ',' << p.p1 << ',' << p.pe << ','
           << p.rho01.real() << ',' << p.rho01.imag() << '\n';
    }
}

}  // namespace qsta
