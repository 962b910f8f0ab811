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

#ifndef QSTA_HAMILTONIAN_HPP
#define QSTA_HAMILTONIAN_HPP

#include <Eigen/Dense>

#include "qsta/schedule.hpp"

namespace qsta {

// Basis ordering is fixed as (|0>, |1>, |e>): the computational subspace is
// the leading 2x2 block and the auxiliary level carries index 2.

enum class HamiltonianKind { Bare, Sta };

struct BrightDark {
    Eigen::Vector3cd bright;
    Eigen::Vector3cd dark;
};

// |b> = sin(theta/2) e^{i phi} |0> + cos(theta/2) |1>,
// |d> = cos(theta/2) e^{i phi} |0> - sin(theta/2) |1>.
BrightDark bright_dark_pair(const GateSpec& g);

// Bare:  H0 = (Omega/2) e^{i phi1} |b><e| + h.c. + Delta |e><e|.
// Sta:   H0 + i phidot e^{i phi1} |b><e| + h.c.  (phidot = d.mixing_rate)
// The sample's phi1 is used as given.
Eigen::Matrix3cd hamiltonian_at(HamiltonianKind kind, const GateSpec& g,
                                const DriveSample& d);

// Instantaneous eigensystem of the bare Hamiltonian. Closed forms:
// eigenvalues 0 (dark) and (Delta -+ sqrt(Delta^2 + Omega^2))/2 on the
// {b, e} block. Gauge: bright component real and non-negative, auxiliary
// component real non-negative when the bright component vanishes.
struct EigenFrame {
    Eigen::Vector3cd dark;     // eigenvalue 0
    Eigen::Vector3cd e_minus;
    Eigen::Vector3cd e_plus;
    double eigenvalue_minus = 0.0;
    double eigenvalue_plus = 0.0;
};

// Throws DegenerateFrame when Omega = Delta = 0.
EigenFrame eigensystem_at(const GateSpec& g, const DriveSample& d);

}  // namespace qsta

#endif
