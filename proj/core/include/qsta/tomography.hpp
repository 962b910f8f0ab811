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

#ifndef QSTA_TOMOGRAPHY_HPP
#define QSTA_TOMOGRAPHY_HPP

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <string>

#include "qsta/propagator.hpp"

namespace qsta {

// Process matrix in the operator basis (I, X, Y, Z) of the qubit subspace.
// Leakage into |e> is kept as trace loss of the projected block, so the
// chi of a leaky channel is sub-trace-preserving by design.
struct ChiMatrix {
    Eigen::Matrix4cd entries;
    // Linear inversion returned a severely non-physical matrix
    // (minimum eigenvalue < -0.05).
    bool reconstruction_warning = false;
};

struct PauliExpectations {
    double x = 0.0, y = 0.0, z = 0.0;
    double leak = 0.0;  // rho_ee
};

// Pauli expectations of the projected (not renormalized) qubit block.
PauliExpectations pauli_expectations(const Eigen::Matrix3cd& rho3);

// Black-box channel: qubit-subspace density matrix in (embedded with zero
// |e> occupancy), full three-level density matrix out.
struct Channel {
    std::function<Eigen::Matrix3cd(const Eigen::Matrix2cd&)> apply;
    std::string label;
};

Channel channel_from_unitary(const Eigen::Matrix2cd& u, std::string label = {});
Channel channel_from_unitary3(const Eigen::Matrix3cd& u3, std::string label = {});
Channel lindblad_channel(const ScheduleVariant& schedule, HamiltonianKind kind,
                         const ErrorModel& err, const NoiseModel& noise,
                         int n_steps, std::string label = {});
// End-to-end variant: each tomography input is prepared from |0> by running
// the corresponding preparation gate (I, Xhalf, H, X) through the simulator,
// while the reconstruction still assumes ideal inputs, so preparation error
// enters the chi as it would in an experiment.
Channel lindblad_channel_gate_prepared(const ScheduleVariant& schedule,
                                       HamiltonianKind kind, const ErrorModel& err,
                                       const NoiseModel& noise, int n_steps,
                                       std::string label = {});

// Linear-inversion chi reconstruction from the four input states
// |0>, (|0>+i|1>)/sqrt(2), (|0>+|1>)/sqrt(2), |1>. The four channel
// evaluations run concurrently. Deterministic.
ChiMatrix process_chi(const Channel& ch);

// Chi matrix of the ideal unitary channel rho -> U rho U^dag.
ChiMatrix ideal_chi(const Eigen::Matrix2cd& u);

// F = Tr(chi_ideal(U) * chi); equals 1 for the ideal channel of the same
// gate and is invariant under a global phase of `ideal`.
double process_fidelity(const ChiMatrix& chi, const Eigen::Matrix2cd& ideal);

// JSON export: {basis:["I","X","Y","Z"], re: 4x4, im: 4x4,
//               fidelity: number, gate: string}
void write_chi_json(std::ostream& os, const ChiMatrix& chi, double fidelity,
                    const std::string& gate);

}  // namespace qsta

#endif
