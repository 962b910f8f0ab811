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

#include "qsta/schedule.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "qsta/errors.hpp"

namespace qsta {

namespace {
constexpr double kPi = std::numbers::pi;

void check_time(double t, double duration) {
    if (!(t >= 0.0 && t <= duration)) {
        throw OutOfRange("drive sample time outside [0, T]");
    }
}

void check_schedule_params(double omega_a, double duration_t) {
    if (!(omega_a > 0.0)) throw InvalidInput("omega_a must be > 0");
    if (!(duration_t > 0.0)) throw InvalidInput("duration_t must be > 0");
}
}  // namespace

GateSpec GateSpec::checked(double theta, double phi_rel, double gamma) {
    if (!(theta >= 0.0 && theta <= kPi)) {
        throw InvalidInput("theta outside [0, pi]");
    }
    if (!(phi_rel >= 0.0 && phi_rel < 2 * kPi)) {
        throw InvalidInput("phi_rel outside [0, 2pi)");
    }
    if (!(gamma > -2 * kPi && gamma < 2 * kPi)) {
        throw InvalidInput("gamma outside (-2pi, 2pi)");
    }
    return GateSpec{theta, phi_rel, gamma};
}

ErrorModel ErrorModel::rabi(double alpha) {
    if (!(std::fabs(alpha) < 1.0)) {
        throw InvalidInput("alpha_rabi magnitude must be < 1");
    }
    return ErrorModel{alpha, true};
}

StaSchedule StaSchedule::for_gate(const GateSpec& gate, double omega_a,
                                  double duration_t, double gamma2) {
    check_schedule_params(omega_a, duration_t);
    return StaSchedule{gate, omega_a, duration_t, gate.gamma + gamma2, gamma2};
}

StaSchedule StaSchedule::symmetric_split(const GateSpec& gate, double omega_a,
                                         double duration_t) {
    return for_gate(gate, omega_a, duration_t, kPi - gate.gamma / 2.0);
}

NhqcSchedule NhqcSchedule::for_gate(const GateSpec& gate, double omega_a,
                                    double duration_t, double gamma2) {
    check_schedule_params(omega_a, duration_t);
    return NhqcSchedule{gate, omega_a, duration_t, gate.gamma + gamma2, gamma2, 0.0};
}

OptimizedStaSchedule OptimizedStaSchedule::from(const StaSchedule& base,
                                                std::vector<double> coefficients) {
    return OptimizedStaSchedule{base, std::move(coefficients)};
}

double OptimizedStaSchedule::mixing_angle_local(double tau) const {
    const double half = base.duration_t / 2.0;
    double phi = kPi * tau / base.duration_t;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        phi += coefficients[k] * std::sin(2 * kPi * (k + 1) * tau / half);
    }
    return phi;
}

double OptimizedStaSchedule::mixing_rate_local(double tau) const {
    const double half = base.duration_t / 2.0;
    double rate = kPi / base.duration_t;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        const double w = 2 * kPi * (k + 1) / half;
        rate += coefficients[k] * w * std::cos(w * tau);
    }
    return rate;
}

DriveSample drive_at(const StaSchedule& s, double t, const ErrorModel& err) {
    check_time(t, s.duration_t);
    const double x = 2 * kPi * t / s.duration_t;
    const bool second = t > s.duration_t / 2.0;
    DriveSample d;
    d.t = t;
    d.omega = (1.0 + err.alpha_rabi) * s.omega_a * std::fabs(std::sin(x));
    d.delta = (second ? -1.0 : 1.0) * s.omega_a * std::cos(x);
    d.phi1 = second ? s.gamma2 : s.gamma1;
    const double cd_scale = err.scale_counterdiabatic ? (1.0 + err.alpha_rabi) : 1.0;
    d.mixing_rate = cd_scale * kPi / s.duration_t;
    d.segment = second ? Segment::SecondHalf : Segment::FirstHalf;
    return d;
}

double mixing_angle_at(const StaSchedule& s, double t) {
    check_time(t, s.duration_t);
    return kPi * t / s.duration_t;
}

DriveSample nhqc_drive_at(const NhqcSchedule& s, double t, const ErrorModel& err) {
    check_time(t, s.duration_t);
    const bool second = t > s.duration_t / 2.0;
    // sin^2 envelope, area pi per half: integral of sin^2(2 pi t/T) over a
    // half is T/4, so the prefactor is 4 pi / T.
    const double env = (4 * kPi / s.duration_t) *
                       std::pow(std::sin(2 * kPi * t / s.duration_t), 2);
    DriveSample d;
    d.t = t;
    d.omega = (1.0 + err.alpha_rabi) * env;
    d.delta = 0.0;
    d.phi1 = second ? (s.gamma2 + s.segment_offset) : s.gamma1;
    d.mixing_rate = 0.0;
    d.segment = second ? Segment::SecondHalf : Segment::FirstHalf;
    return d;
}

DriveSample optimized_drive_at(const OptimizedStaSchedule& s, double t,
                               const ErrorModel& err) {
    check_time(t, s.base.duration_t);
    const double half = s.base.duration_t / 2.0;
    const bool second = t > half;
    const double tau = second ? t - half : t;
    const double phi = s.mixing_angle_local(tau);
    DriveSample d;
    d.t = t;
    d.omega = (1.0 + err.alpha_rabi) * s.base.omega_a * std::sin(2 * phi);
    d.delta = s.base.omega_a * std::cos(2 * phi);
    d.phi1 = second ? s.base.gamma2 : s.base.gamma1;
    const double cd_scale = err.scale_counterdiabatic ? (1.0 + err.alpha_rabi) : 1.0;
    d.mixing_rate = cd_scale * s.mixing_rate_local(tau);
    d.segment = second ? Segment::SecondHalf : Segment::FirstHalf;
    return d;
}

double applied_drive_phase(const DriveSample& d) {
    return -d.phi1 + (d.segment == Segment::SecondHalf ? kPi : 0.0);
}

GateSpec driven_loop_spec(const GateSpec& g) {
    double phi = g.phi_rel + kPi;
    if (phi >= 2 * kPi) phi -= 2 * kPi;
    return GateSpec{g.theta, phi, g.gamma};
}

ToneParams raw_tone_params(const StaSchedule& s, double t, const ErrorModel& err) {
    const DriveSample d = drive_at(s, t, err);
    const double omega_eff =
        2.0 * std::sqrt(std::pow(d.omega / 2.0, 2) + std::pow(d.mixing_rate, 2));
    const double common = applied_drive_phase(d) + std::atan2(2.0 * d.mixing_rate, d.omega);
    ToneParams p;
    p.omega0 = omega_eff * std::sin(s.gate.theta / 2.0);
    p.omega1 = omega_eff * std::cos(s.gate.theta / 2.0);
    p.phi1 = common;
    p.phi0 = common + driven_loop_spec(s.gate).phi_rel;
    return p;
}

void export_pulses_csv(std::ostream& os, const StaSchedule& s,
                       const ErrorModel& err, int n_samples) {
    if (n_samples < 2) throw InvalidInput("export_pulses_csv: n_samples < 2");
    os << "t_s,omega0_rad_s,omega1_rad_s,phi0_rad,phi1_rad,delta_rad_s\n";
    os.precision(12);
    for (int k = 0; k < n_samples; ++k) {
        const double t = s.duration_t * k / (n_samples - 1);
        const ToneParams p = raw_tone_params(s, t, err);
        const DriveSample d = drive_at(s, t, err);
        os << t << ',' << p.omega0 << ',' << p.omega1 << ',' << p.phi0 << ','
           << p.phi1 << ',' << d.delta << '\n';
    }
}

}  // namespace qsta
