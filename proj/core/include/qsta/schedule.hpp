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

#ifndef QSTA_SCHEDULE_HPP
#define QSTA_SCHEDULE_HPP

#include <iosfwd>
#include <vector>

namespace qsta {

// The three control parameters of a holonomic rotation: rotation axis
// n = (sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)) and angle gamma.
struct GateSpec {
    double theta = 0.0;    // [0, pi]
    double phi_rel = 0.0;  // [0, 2*pi)
    double gamma = 0.0;    // (-2*pi, 2*pi)

    // Throws InvalidInput when a parameter is outside its range.
    static GateSpec checked(double theta, double phi_rel, double gamma);
};

// Multiplicative Rabi-amplitude error: every drive amplitude (including the
// counterdiabatic term, which rides on the same calibrated line) is scaled
// by (1 + alpha_rabi). The detuning is never scaled. Setting
// scale_counterdiabatic = false restricts the error to the bare Rabi term.
struct ErrorModel {
    double alpha_rabi = 0.0;  // |alpha_rabi| < 1
    bool scale_counterdiabatic = true;

    static ErrorModel none() { return {}; }
    static ErrorModel rabi(double alpha);
};

enum class Segment { FirstHalf, SecondHalf };

struct DriveSample {
    double t = 0.0;            // seconds
    double omega = 0.0;        // total Rabi amplitude, rad/s, >= 0
    double delta = 0.0;        // detuning, rad/s
    double phi1 = 0.0;         // drive phase parameter, radians
    double mixing_rate = 0.0;  // d(phi_mix)/dt, rad/s
    Segment segment = Segment::FirstHalf;
};

// Counterdiabatic two-segment protocol: Omega(t) = Wa|sin(2 pi t/T)|,
// Delta(t) = +Wa cos(2 pi t/T) on the first half and -Wa cos(2 pi t/T) on
// the second, with the drive phase held at gamma1 then gamma2.
struct StaSchedule {
    GateSpec gate;
    double omega_a = 0.0;     // rad/s, > 0
    double duration_t = 0.0;  // seconds, > 0
    double gamma1 = 0.0;
    double gamma2 = 0.0;

    // gamma1 - gamma2 = gate.gamma is enforced; the default split puts the
    // whole jump on gamma1. A symmetric split (gamma1 = pi + gamma/2,
    // gamma2 = pi - gamma/2) keeps the discrete loop-phase logs away from
    // the principal-branch cut; see symmetric_split().
    static StaSchedule for_gate(const GateSpec& gate, double omega_a,
                                double duration_t, double gamma2 = 0.0);
    static StaSchedule symmetric_split(const GateSpec& gate, double omega_a,
                                       double duration_t);
};

// Resonant two-pulse baseline: Delta = 0, each half a sin^2 envelope with
// pulse area pi, a phase jump between the halves.
struct NhqcSchedule {
    GateSpec gate;
    double omega_a = 0.0;
    double duration_t = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    // Extra second-segment phase, fixed once against the target holonomy by
    // the noiseless simulation oracle. Zero in the drive frame used here.
    double segment_offset = 0.0;

    static NhqcSchedule for_gate(const GateSpec& gate, double omega_a,
                                 double duration_t, double gamma2 = 0.0);
};

// STA schedule whose mixing-angle profile carries a sine-series deformation
// per half: phi_mix(tau) = pi*tau/T + sum_k c_k sin(2 pi k tau / (T/2)).
// The endpoint constraints phi(0) = 0, phi(T/2) = pi/2 hold for any
// coefficients; the drive is recomputed as Omega = Wa sin(2 phi_mix),
// Delta = Wa cos(2 phi_mix) with the counterdiabatic rate from the
// analytic derivative.
struct OptimizedStaSchedule {
    StaSchedule base;
    std::vector<double> coefficients;

    static OptimizedStaSchedule from(const StaSchedule& base,
                                     std::vector<double> coefficients);
    // Local mixing angle and its rate at tau in [0, T/2] (half-local time).
    double mixing_angle_local(double tau) const;
    double mixing_rate_local(double tau) const;
};

// Drive fields at time t. Throws OutOfRange unless 0 <= t <= T.
DriveSample drive_at(const StaSchedule& s, double t, const ErrorModel& err);
DriveSample nhqc_drive_at(const NhqcSchedule& s, double t, const ErrorModel& err);
DriveSample optimized_drive_at(const OptimizedStaSchedule& s, double t,
                               const ErrorModel& err);

// Branch-continuous mixing angle: pi*t/T over the whole protocol, so that
// tan(2 phi_mix) = Omega/Delta wherever Delta != 0, phi_mix(0) = 0,
// phi_mix(T/2) = pi/2, and the followed eigenstate returns to the bright
// state at t = T.
double mixing_angle_at(const StaSchedule& s, double t);

// The two physical tone amplitudes and phases realizing the full
// counterdiabatic Hamiltonian at time t.
struct ToneParams {
    double omega0 = 0.0;  // |0> <-> |e> tone amplitude, rad/s
    double omega1 = 0.0;  // |1> <-> |e> tone amplitude, rad/s
    double phi0 = 0.0;
    double phi1 = 0.0;
};
ToneParams raw_tone_params(const StaSchedule& s, double t, const ErrorModel& err);

// --- drive frame -----------------------------------------------------------
//
// The frame in which the schedules above realize the closed-form holonomy
// matrix (see holonomy_matrix): the applied tone phase is the conjugate of
// the phi1 field, a pi spin-echo phase shift is added on the second half,
// and the driven bright superposition carries a pi offset in the relative
// tone phase. Fixed once by the end-to-end simulation and used consistently
// by the propagator, the phase bookkeeping and the pulse export.

// Phase actually applied to the coupling term at this sample.
double applied_drive_phase(const DriveSample& d);

// Gate parameters of the driven loop (phi_rel shifted by pi).
GateSpec driven_loop_spec(const GateSpec& g);

// Waveform export: CSV with header
// t_s,omega0_rad_s,omega1_rad_s,phi0_rad,phi1_rad,delta_rad_s
// on a uniform grid of n_samples points (>= 2).
void export_pulses_csv(std::ostream& os, const StaSchedule& s,
                       const ErrorModel& err, int n_samples = 1000);

}  // namespace qsta

#endif
