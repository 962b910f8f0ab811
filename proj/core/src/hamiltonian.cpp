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

#include "qsta/hamiltonian.hpp"

#include <cmath>

#include "qsta/errors.hpp"
#include "qsta/linalg.hpp"

namespace qsta {

BrightDark bright_dark_pair(const GateSpec& g) {
    const double sh = std::sin(g.theta / 2.0);
    const double ch = std::cos(g.theta / 2.0);
    const Complex ph = std::exp(kI * g.phi_rel);
    BrightDark bd;
    bd.bright << sh * ph, ch, 0.0;
    bd.dark << ch * ph, -sh, 0.0;
    return bd;
}

Eigen::Matrix3cd hamiltonian_at(HamiltonianKind kind, const GateSpec& g,
                                const DriveSample& d) {
    const BrightDark bd = bright_dark_pair(g);
    const Eigen::Vector3cd e = Eigen::Vector3cd::Unit(2);
    Complex coupling = d.omega / 2.0;
    if (kind == HamiltonianKind::Sta) {
        coupling += kI * d.mixing_rate;
    }
    coupling *= std::exp(kI * d.phi1);
    Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
    h += coupling * (bd.bright * e.adjoint());
    h += std::conj(coupling) * (e * bd.bright.adjoint());
    h(2, 2) = d.delta;
    return h;
}

namespace {
// Rotate v by a unit phase so that <ref|v> is real non-negative.
void fix_gauge(Eigen::Vector3cd& v, const Eigen::Vector3cd& bright) {
    const Complex bc = bright.adjoint() * v;
    Complex c = bc;
    if (std::abs(c) < 1e-12) {
        c = v(2);  // bright component vanishes: gauge on the |e> component
    }
    if (std::abs(c) > 0.0) {
        v *= std::conj(c) / std::abs(c);
    }
}
}  // namespace

EigenFrame eigensystem_at(const GateSpec& g, const DriveSample& d) {
    if (d.omega == 0.0 && d.delta == 0.0) {
        throw DegenerateFrame("eigensystem_at: Omega = Delta = 0");
    }
    const BrightDark bd = bright_dark_pair(g);
    const Eigen::Vector3cd e = Eigen::Vector3cd::Unit(2);
    const double r = std::sqrt(d.delta * d.delta + d.omega * d.omega);
    // Mixing angle in [0, pi/2] from tan(2 phi) = Omega/Delta with Omega >= 0.
    const double phm = 0.5 * std::atan2(d.omega, d.delta);
    const Complex ephi = std::exp(-kI * d.phi1);
    EigenFrame f;
    f.dark = bd.dark;
    f.e_minus = std::cos(phm) * bd.bright - std::sin(phm) * ephi * e;
    f.e_plus = std::sin(phm) * bd.bright + std::cos(phm) * ephi * e;
    f.eigenvalue_minus = (d.delta - r) / 2.0;
    f.eigenvalue_plus = (d.delta + r) / 2.0;
    fix_gauge(f.e_minus, bd.bright);
    fix_gauge(f.e_plus, bd.bright);
    return f;
}

}  // namespace qsta
