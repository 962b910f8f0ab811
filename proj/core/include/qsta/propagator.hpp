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

#ifndef QSTA_PROPAGATOR_HPP
#define QSTA_PROPAGATOR_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <variant>
#include <vector>

#include "qsta/hamiltonian.hpp"
#include "qsta/linalg.hpp"
#include "qsta/schedule.hpp"

namespace qsta {

// Relaxation and dephasing times of the auxiliary (e) and upper logical (f)
// levels. Pure-dephasing rates are derived as
//   gamma_phi_e = 1/T2_ge - 1/(2 T1_e)
//   gamma_phi_f = max(0, 1/T2_ef - 1/(2 T1_f))
// attributing the ef coherence decay to f-level dephasing alone.
struct NoiseModel {
    double t1_e = 29e-6;
    double t1_f = 9e-6;
    double t2_ge = 5.9e-6;
    double t2_ef = 5.8e-6;
    bool enabled = true;

    // Throws InvalidNoiseModel unless all times are positive and the derived
    // e-level pure-dephasing rate is non-negative.
    static NoiseModel checked(double t1_e, double t1_f, double t2_ge,
                              double t2_ef, bool enabled = true);
    // Device values used throughout: T1_e = 29 us, T1_f = 9 us,
    // T2_ge = 5.9 us, T2_ef = 5.8 us.
    static NoiseModel device_defaults() { return NoiseModel{}; }
    static NoiseModel disabled();

    double gamma_phi_e() const;
    double gamma_phi_f() const;
    // Collapse operators in the (|0>,|1>,|e>) basis.
    std::vector<Eigen::Matrix3cd> collapse_operators() const;
};

// Time-independent drive, mainly the time-independent limit of the
// integrator. Evolves literally under hamiltonian_at(kind, gate, sample)
// with no drive-frame adjustments.
struct FrozenDrive {
    GateSpec gate;
    DriveSample sample;
    double duration_t = 0.0;
};

using ScheduleVariant =
    std::variant<StaSchedule, NhqcSchedule, OptimizedStaSchedule, FrozenDrive>;

struct UnitaryResult {
    Eigen::Matrix3cd final_unitary;
    int steps_used = 0;
};

struct LindbladResult {
    Eigen::Matrix3cd final_rho;
    int steps_used = 0;
};

struct TrajectoryPoint {
    double t = 0.0;
    double p0 = 0.0, p1 = 0.0, pe = 0.0;
    Complex rho01{};
};

struct StateTrajectory {
    std::vector<TrajectoryPoint> points;
    Eigen::Matrix3cd final_rho;
    int steps_used = 0;
};

// Time-ordered product of per-step midpoint exponentials exp(-i H(t_mid) dt).
// n_steps >= 100, forced even so the mid-protocol discontinuity lands on a
// step boundary. Second-order accurate in dt.
UnitaryResult evolve_unitary(const ScheduleVariant& schedule, HamiltonianKind kind,
                             const ErrorModel& err, int n_steps);

// Master-equation evolution: the same midpoint stepping for the coherent
// part, first-order operator splitting for the dissipator, Hermiticity
// enforced by symmetrization each step.
LindbladResult evolve_lindblad(const ScheduleVariant& schedule, HamiltonianKind kind,
                               const ErrorModel& err, const NoiseModel& noise,
                               const Eigen::Matrix3cd& rho0, int n_steps);

// State evolution with trajectory sampling (populations and the qubit
// coherence at ~n_record uniformly spaced times). Uses the Lindblad path
// when noise.enabled, the unitary path otherwise.
StateTrajectory simulate_state(const ScheduleVariant& schedule, HamiltonianKind kind,
                               const ErrorModel& err, const NoiseModel& noise,
                               const Eigen::Matrix3cd& rho0, int n_steps,
                               int n_record = 200);

// Free decay under the noise model alone (no drive).
LindbladResult decay_free(const NoiseModel& noise, const Eigen::Matrix3cd& rho0,
                          double duration, int n_steps);

struct ConvergenceReport {
    double err_coarse = 0.0;   // ||U_n - U_2n||_max
    double err_fine = 0.0;     // ||U_2n - U_4n||_max
    double order = 0.0;        // log2(err_coarse / err_fine)
    bool exact = false;        // both errors at machine precision
};

// Step-halving self-check of the integrator; order >= 1.8 expected for
// smooth schedules. n_steps >= 200.
ConvergenceReport convergence_check(const ScheduleVariant& schedule,
                                    HamiltonianKind kind, const ErrorModel& err,
                                    int n_steps);

// CSV dump: t_s,p0,p1,pe,re_rho01,im_rho01
void write_trajectory_csv(std::ostream& os, const StateTrajectory& traj);

}  // namespace qsta

#endif
