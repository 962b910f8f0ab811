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

#ifndef QSTA_HOLONOMY_HPP
#define QSTA_HOLONOMY_HPP

#include <Eigen/Dense>
#include <string_view>

#include "qsta/schedule.hpp"

namespace qsta {

// Closed-form holonomy of the cyclic evolution, in the computational basis:
//
//   U(theta, phi, gamma) = e^{i gamma/2} [ c - i s cos(theta)        -i s sin(theta) e^{+i phi} ]
//                                        [ -i s sin(theta) e^{-i phi}  c + i s cos(theta)       ]
//
// with c = cos(gamma/2), s = sin(gamma/2). det U = e^{i gamma}; up to a
// global phase this is a rotation by gamma about the axis
// (sin(theta)cos(phi), -sin(theta)sin(phi), cos(theta)).
Eigen::Matrix2cd holonomy_matrix(const GateSpec& g);

enum class NamedGate { I, Z, X, H, Xhalf };

// Standard parameter triples: Z = (pi, 0, pi), X = (pi/2, 0, pi),
// H = (pi/4, 0, pi), Xhalf = (pi/2, 0, pi/2), I = (0, 0, 0).
GateSpec named_gate(NamedGate name);
// Throws NotFound for unknown names. Accepts "I","Z","X","H","Xhalf".
GateSpec named_gate(std::string_view name);

struct NotFound : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ExtractedGate {
    Eigen::Matrix2cd qubit_unitary;
    double leakage = 0.0;
    bool unitarized = false;
    bool global_phase_removed = false;
};

// Leading 2x2 block of a 3x3 propagator. leakage = 1 - sigma_min^2 of the
// block; the block is unitarized by polar decomposition only when
// leakage < 1e-3, and aligned in global phase against `reference` when
// given. Throws InvalidInput unless u3 is unitary within 1e-8.
ExtractedGate extract_qubit_gate(const Eigen::Matrix3cd& u3);
ExtractedGate extract_qubit_gate(const Eigen::Matrix3cd& u3,
                                 const Eigen::Matrix2cd& reference);

// Discretized loop phase of the followed eigenstate branch,
//   -Im sum_k ln <E(t_k)|E(t_{k+1})>
// over the closed loop (gauge invariant; the mid-protocol phase jump is
// handled without derivatives). Returns +(gamma1 - gamma2) for schedules
// whose per-step logs stay inside the principal branch; the symmetric
// gamma split guarantees that for any gamma in (-2 pi, 2 pi). Exact
// multiples of 2 pi (pure winding at degenerate jump overlaps) are removed.
// n_steps >= 1000. Throws BranchLost if adjacent-step tracking drops
// below overlap 0.9.
double geometric_phase_numeric(const StaSchedule& s, int n_steps);

// Quadrature of the followed-branch eigenvalue over [t0, t1] (defaults to
// the full protocol, where the two mirrored halves cancel).
double dynamical_phase_numeric(const StaSchedule& s, int n_steps);
double dynamical_phase_numeric(const StaSchedule& s, int n_steps, double t0,
                               double t1);

struct PhaseReport {
    double geometric = 0.0;
    double dynamical = 0.0;
    double total = 0.0;
};

PhaseReport phase_report(const StaSchedule& s, int n_steps);

}  // namespace qsta

#endif
